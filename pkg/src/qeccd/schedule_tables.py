"""Off-diagonal measurement schedule for the 2AD process matrix, as printed.

Each entry is ``(syndrome, toggle, part, target, expression)`` grouped by the
pre-processing unitary.  Everything is transcribed literally, including the
slips (wrong labels, undefined symbols ``X``/``Y``); resolution and auditing
happen in :mod:`qeccd.tomography`.  Expressions are Python syntax over the
coefficient names with ``Re``/``Im``.
"""

SCHEDULE_VERSION = 1

TABLES = (
    (("II", "IZ"), 1, (
        ("II", None, "re", ("II", "IZ"), "(A - 1 + Re(J) + Re(M) - Re(Q) - Re(T))/16"),
        ("II", 1, "im", ("II", "IZ"), "(2*Im(L) + Im(J) + Im(M) + Im(Q) + Im(T))/16"),
        ("IX", 1, "re", ("IX", "IY"), "0"),
        ("IX", None, "im", ("IX", "IY"), "(C + E + F + G + 2*Re(U) - 2*Re(V))/32"),
        ("XI", None, "re", ("XI", "XZ"), "(C + E - F - G)/32"),
        ("XI", 1, "im", ("XI", "XZ"), "(Im(U) - Im(V))/16"),
        ("XX", 1, "re", ("XX", "XY"), "0"),
        ("XX", None, "im", ("XX", "XY"), "H/16"),
        ("IY", None, "re", ("IY", "YZ"), "(C + E - F - G)/32"),
        ("IY", 1, "im", ("IY", "YZ"), "(Im(U) - Im(V))/16"),
        ("YX", 1, "re", ("YX", "YY"), "0"),
        ("YX", None, "im", ("YX", "YY"), "H/16"),
        ("IZ", None, "re", ("IZ", "ZZ"), "(A - 1 - Re(J) - Re(M) + Re(Q) + Re(T))/16"),
        ("IZ", 1, "im", ("IZ", "ZZ"), "(Im(J) - 2*Im(L) + Im(M) + Im(Q) + Im(T))/16"),
        ("ZX", 1, "re", ("ZX", "ZY"), "0"),
        ("ZX", None, "im", ("YX", "YY"), "(C + E + F + G - 2*(Re(X) - Re(Y)))/32"),
    )),
    (("II", "ZI"), 2, (
        ("II", None, "re", ("II", "ZI"), "(A - 1 + Re(J) + Re(M) - Re(Q) - Re(T))/16"),
        ("II", 2, "im", ("II", "ZI"), "(2*Im(L) + Im(J) + Im(M) + Im(Q) + Im(T))/16"),
        ("IX", None, "re", ("IX", "ZX"), "(C + E - F - G)/32"),
        ("IX", 2, "im", ("IX", "ZX"), "(Im(U) - Im(V))/16"),
        ("XI", 2, "re", ("XI", "YI"), "0"),
        ("XI", None, "im", ("XI", "YI"), "(C + E + F + G + 2*Re(U) + 2*Re(V))/32"),
        ("XX", 2, "re", ("XX", "YX"), "0"),
        ("XX", None, "im", ("XX", "YX"), "H/16"),
        ("XY", 2, "re", ("XY", "YY"), "0"),
        ("XY", None, "im", ("XY", "YY"), "H/16"),
    )),
    (("II", "XX"), 3, (
        ("II", None, "re", ("II", "XX"), "(B - D + Re(J) - Re(M) - Re(Q) + Re(T))/16"),
        ("II", 3, "im", ("II", "XX"), "(2*Im(P) - Im(J) + Im(M) - Im(Q) + Im(T))/16"),
        ("IX", None, "re", ("IX", "XI"), "(C - E + F - G + 2*Re(U) + 2*Re(V))/32"),
        ("IX", 3, "im", ("IX", "XI"), "0"),
        ("IY", 3, "re", ("IY", "XZ"), "(Re(U) + Re(V))/16"),
        ("IY", None, "im", ("IY", "XZ"), "-(C - E - F + G)/32"),
        ("YI", 3, "re", ("YI", "ZX"), "(Re(X) + Re(Y))/16"),
        ("YI", None, "im", ("YI", "ZX"), "-(C - E - F + G)/32"),
        ("YY", None, "re", ("YY", "ZZ"), "-(-B + D + Re(J) - Re(M) - Re(Q) + Re(T))/16"),
        ("YY", 3, "im", ("YY", "ZZ"), "-(2*Im(P) + Im(J) - Im(M) + Im(Q) - Im(T))/16"),
        ("YZ", None, "re", ("YZ", "ZY"), "(C - E + F - G - 2*Re(U) + 2*Re(V))/32"),
        ("YZ", 3, "im", ("YZ", "ZY"), "0"),
    )),
    (("II", "YY"), 4, (
        ("II", None, "re", ("II", "YY"), "(B - D + Re(J) - Re(M) - Re(Q) + Re(T))/16"),
        ("II", 4, "im", ("II", "YY"), "(2*Im(P) - Im(J) + Im(M) - Im(Q) + Im(T))/16"),
        ("IX", 4, "re", ("IX", "YZ"), "(Re(U) + Re(V))/16"),
        ("IX", None, "im", ("IX", "YZ"), "-(C - E - F + G)/32"),
        ("IY", None, "re", ("IY", "YI"), "(C - E + F - G + 2*Re(U) + 2*Re(V))/32"),
        ("IY", 4, "im", ("IY", "YI"), "0"),
        ("XI", 4, "re", ("XI", "ZY"), "(Im(X) + Im(Y))/16"),
        ("XI", None, "im", ("XI", "ZY"), "-(C - E - F + G)/32"),
        ("XX", None, "re", ("XX", "ZZ"), "-(-B + D + Re(J) - Re(M) - Re(Q) + Re(T))/16"),
        ("XX", 4, "im", ("XX", "ZZ"), "-(2*Im(P) + J*Im(J) - Im(M) + Im(Q) - Im(T))/16"),
        ("XZ", None, "re", ("XZ", "ZX"), "(C - E + F - G - 2*Re(U) + 2*Re(V))/32"),
        ("XZ", 4, "im", ("XZ", "ZX"), "0"),
    )),
    (("II", "ZZ"), 5, (
        ("II", None, "re", ("II", "ZZ"), "(1 + A - B - D + 2*Re(L) - 2*Re(P))/16"),
        ("II", 5, "im", ("II", "ZZ"), "(2*Im(J) + 2*Im(M) - 2*Im(Q) - 2*Im(T))/16"),
        ("IX", 5, "re", ("IX", "ZY"), "-(Im(U) - Im(V))/16"),
        ("IX", None, "im", ("IX", "ZY"), "(C + E - F - G)/32"),
        ("IY", 5, "re", ("IY", "ZX"), "(Im(U) - Im(V))/16"),
        ("IY", None, "im", ("IY", "ZX"), "-(C + E - F - G)/32"),
        ("IZ", None, "re", ("IZ", "ZI"), "(1 + A - 2*Re(L))/16"),
        ("IZ", 5, "im", ("IZ", "ZI"), "0"),
        ("XI", 5, "re", ("XI", "YZ"), "-(Im(U) - Im(V))/16"),
        ("XI", None, "im", ("XI", "YZ"), "(C + E - F - G)/32"),
        ("YI", 5, "re", ("YI", "XZ"), "-(Im(U) + Im(V))/16"),
        ("YI", None, "im", ("YI", "XZ"), "-(C + E - F - G)/32"),
        ("XX", None, "re", ("XX", "YY"), "(B + D - H - 2*Re(P))/16"),
        ("XX", 5, "im", ("XX", "YY"), "0"),
        ("XY", None, "re", ("XY", "YX"), "H/16"),
        ("XY", 5, "im", ("XY", "YX"), "0"),
    )),
    (("IX", "YI"), 6, (
        ("II", None, "re", ("IX", "YI"), "0"),
        ("II", 6, "im", ("IX", "YI"), "(C - E + F - G + 2*Im(U) + 2*Im(V))/32"),
        ("XI", 6, "re", ("XX", "ZI"), "-(Re(J) - Re(M) + Re(Q) - Re(T))/16"),
        ("XI", None, "im", ("XX", "ZI"), "-(Im(J) - Im(M) + Im(Q) - Im(T))/16"),
        ("XX", 6, "re", ("XI", "ZX"), "-(C - E - F + G)/32"),
        ("XX", None, "im", ("XI", "ZX"), "-(Im(U) + Im(V))/16"),
        ("XY", 6, "re", ("XZ", "ZY"), "0"),
        ("XY", None, "im", ("XZ", "ZY"), "-(C + E + F + G - 2*Im(U) + 2*Im(V))/32"),
        ("YY", 6, "re", ("IY", "YZ"), "-(C - E - F + G)/32"),
        ("YY", None, "im", ("IY", "YZ"), "-(Im(U) + Im(V))/16"),
        ("YZ", 6, "re", ("YY", "IZ"), "-(Re(J) - Re(M) + Re(Q) - Re(T))/16"),
        ("YZ", None, "im", ("YY", "IZ"), "-(-Im(J) + Im(M) + Im(Q) - Im(T))/16"),
    )),
    (("IY", "XI"), 7, (
        ("II", None, "re", ("IY", "XI"), "0"),
        ("II", 7, "im", ("IY", "XI"), "-(C - E + F - G + 2*Re(U) + 2*Re(V))/32"),
        ("IX", 7, "re", ("IZ", "XX"), "-(Re(J) - Re(M) + Re(Q) - Re(T))/16"),
        ("IX", None, "im", ("IZ", "XX"), "-(-Im(J) + Im(M) + Im(Q) - Im(T))/16"),
        ("IZ", 7, "re", ("IX", "XZ"), "(C - E - F + G)/32"),
        ("IZ", None, "im", ("IX", "XZ"), "(Im(U) + Im(V))/16"),
        ("YI", 7, "re", ("YY", "ZI"), "(Re(J) - Re(M) + Re(Q) - Re(T))/16"),
        ("YI", None, "im", ("YY", "ZI"), "(Im(J) - Im(M) + Im(Q) - Im(T))/16"),
        ("YX", None, "re", ("YZ", "ZX"), "0"),
        ("YX", 7, "im", ("YZ", "ZX"), "(C - E + F - G - 2*Re(U) - 2*Re(V))/32"),
        ("YY", 7, "re", ("YI", "ZY"), "(C - E - F + G)/32"),
        ("YY", None, "im", ("YI", "ZY"), "(Im(U) + Im(V))/16"),
    )),
    (("IY", "ZY"), 8, (
        ("II", None, "re", ("IY", "ZY"), "(C + E - F - G)/32"),
        ("II", 8, "im", ("IY", "ZY"), "(Im(U) - Im(V))/16"),
        ("IX", None, "re", ("IZ", "ZZ"), "-(A - 1 - Re(J) - Re(M) + Re(Q) + Re(T))/16"),
        ("IX", 8, "im", ("IZ", "ZZ"), "-(-2*Im(L) + Im(J) + Im(M) + Im(Q) + Im(T))/16"),
        ("XX", 8, "re", ("XZ", "YZ"), "0"),
        ("XX", None, "im", ("XZ", "YZ"), "-(C + E + F + G - 2*Re(U) + 2*Re(V))/32"),
    )),
)
