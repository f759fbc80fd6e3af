"""The 22 generic r-matrix families of osp(2|2), transcribed as printed blocks.

Square roots are avoided by sampling the root: ``sJ`` stands for ``sqrt(J)``
and ``J`` is derived as ``sJ**2``.
"""

from .templates import matrix_template

_FERMI_K = [["0", "0", "0", "K"],
            ["0", "0", "-K", "0"],
            ["0", "-K", "0", "0"],
            ["K", "0", "0", "0"]]

_FERMI_G = [["0", "0", "0", "G"],
            ["0", "0", "-G", "0"],
            ["0", "-G", "0", "0"],
            ["G", "0", "0", "0"]]

RAW_CASES = [
    matrix_template(
        "case1", "JKLU",
        [["0", "J/2", "(-2*K*L)/J", "K+L"],
         ["-J/2", "0", "-(K+L)/2", "J/2"],
         ["(2*K*L)/J", "(K+L)/2", "0", "(2*K*L)/J"],
         ["-(K+L)", "-J/2", "(-2*K*L)/J", "0"]],
        [["(U*J)/(2*L)", "U", "0", "(K-L)/2"],
         ["U", "(2*U*L)/J", "(-K+L)/2", "0"],
         ["0", "(-K+L)/2", "0", "0"],
         ["(K-L)/2", "0", "0", "0"]],
        exclusions=("J", "L"), source="Case 1"),
    matrix_template(
        "case2", "KLN",
        [["0", "0", "(L*N)/(2*(2*K+L))", "2*K+L"],
         ["0", "0", "-L/2", "0"],
         ["(-L*N)/(2*(2*K+L))", "L/2", "0", "-N/2"],
         ["-2*K-L", "0", "N/2", "0"]],
        [["0", "0", "0", "-L/2"],
         ["0", "0", "L/2", "0"],
         ["0", "L/2", "0", "0"],
         ["-L/2", "0", "0", "0"]],
        exclusions=("2*K+L",), source="Case 2"),
    matrix_template(
        "case3", "KLY",
        [["0", "Y", "(L*(-2*K-L))/Y", "0"],
         ["-Y", "0", "-(K+L)", "0"],
         ["(L*(2*K+L))/Y", "K+L", "0", "0"],
         ["0", "0", "0", "0"]],
        _FERMI_K, exclusions=("Y",), source="Case 3"),
    matrix_template(
        "case4", "JKLM",
        [["0", "(J*L)/M", "(M*(K**2-L**2))/(J*L)", "M"],
         ["(-J*L)/M", "0", "-L", "J/2"],
         ["(M*(-K**2+L**2))/(J*L)", "L", "0", "(M**2*(-K**2+L**2))/(2*J*L**2)"],
         ["-M", "-J/2", "(M**2*(K**2-L**2))/(2*J*L**2)", "0"]],
        _FERMI_K, exclusions=("J", "L", "M"), source="Case 4"),
    matrix_template(
        "case5", "BLN",
        [["0", "0", "N/2", "L"],
         ["0", "0", "-L/2", "0"],
         ["-N/2", "L/2", "0", "-N/2"],
         ["-L", "0", "N/2", "0"]],
        [["0", "0", "0", "-L/2"],
         ["0", "B", "L/2", "0"],
         ["0", "L/2", "0", "0"],
         ["-L/2", "0", "0", "0"]],
        source="Case 5"),
    matrix_template(
        "case6", "MUZ",
        [["0", "0", "-2*Z", "0"],
         ["0", "0", "M", "0"],
         ["2*Z", "-M", "0", "0"],
         ["0", "0", "0", "0"]],
        [["(-M*U)/Z", "U", "0", "0"],
         ["U", "(-U*Z)/M", "M", "-Z"],
         ["0", "M", "0", "0"],
         ["0", "-Z", "0", "(-M*Z)/U"]],
        exclusions=("M", "U", "Z"), source="Case 6"),
    matrix_template(
        "case7", "MNT",
        [["0", "0", "-N/2", "M"],
         ["0", "0", "M/2", "0"],
         ["N/2", "-M/2", "0", "-N/2"],
         ["-M", "0", "N/2", "0"]],
        [["0", "0", "0", "-M/2"],
         ["0", "0", "M/2", "0"],
         ["0", "M/2", "0", "0"],
         ["-M/2", "0", "0", "T"]],
        source="Case 7"),
    matrix_template(
        "case8", "CPSTXZ",
        [["0", "-X", "-Z", "-S"],
         ["X", "0", "S/2", "-X"],
         ["Z", "-S/2", "0", "Z"],
         ["S", "X", "-Z", "0"]],
        [["0", "0", "X", "S/2"],
         ["0", "0", "S/2", "-Z"],
         ["X", "S/2", "P", "C"],
         ["S/2", "-Z", "C", "T"]],
        source="Case 8"),
    matrix_template(
        "case9", "CMX",
        [["0", "-2*X", "0", "0"],
         ["2*X", "0", "M", "0"],
         ["0", "-M", "0", "0"],
         ["0", "0", "0", "0"]],
        [["(X*M)/C", "0", "X", "0"],
         ["0", "0", "M", "0"],
         ["X", "M", "(X*C)/M", "C"],
         ["0", "0", "C", "(M*C)/X"]],
        exclusions=("C", "M", "X"), source="Case 9"),
    matrix_template(
        "case10", "JXZ",
        [["0", "-X", "-Z", "0"],
         ["X", "0", "0", "J/2"],
         ["Z", "0", "0", "(-Z*J)/(2*X)"],
         ["0", "-J/2", "(Z*J)/(2*X)", "0"]],
        [["0", "0", "X", "0"],
         ["0", "0", "0", "-Z"],
         ["X", "0", "0", "0"],
         ["0", "-Z", "0", "0"]],
        exclusions=("X",), source="Case 10"),
    matrix_template(
        "case11", "CKZ",
        [["0", "0", "-2*Z", "0"],
         ["0", "0", "K", "0"],
         ["2*Z", "-K", "0", "0"],
         ["0", "0", "0", "0"]],
        [["0", "0", "0", "K"],
         ["0", "(-K*Z)/C", "0", "-Z"],
         ["0", "0", "(-K*C)/Z", "C"],
         ["K", "-Z", "C", "(-Z*C)/K"]],
        exclusions=("C", "K", "Z"), source="Case 11"),
    matrix_template(
        "case12", "CKN",
        [["0", "0", "-N/2", "K"],
         ["0", "0", "K/2", "0"],
         ["N/2", "-K/2", "0", "-N/2"],
         ["-K", "0", "N/2", "0"]],
        [["0", "0", "0", "K/2"],
         ["0", "0", "-K/2", "0"],
         ["0", "-K/2", "(-2*K*C)/N", "C"],
         ["K/2", "0", "C", "(-N*C)/(2*K)"]],
        exclusions=("K", "N"), source="Case 12"),
    matrix_template(
        "case13", "CJKM",
        [["0", "-J/2", "(2*M*K)/J", "M+K"],
         ["J/2", "0", "(M+K)/2", "J/2"],
         ["(-2*M*K)/J", "-(M+K)/2", "0", "(2*M*K)/J"],
         ["-(M+K)", "-J/2", "(-2*M*K)/J", "0"]],
        [["0", "0", "0", "(-M+K)/2"],
         ["0", "0", "(M-K)/2", "0"],
         ["0", "(M-K)/2", "(J*C)/(2*M)", "C"],
         ["(-M+K)/2", "0", "C", "(2*M*C)/J"]],
        exclusions=("J", "M"), source="Case 13"),
    matrix_template(
        "case14", ("G", "sJ", "sN"),
        [["0", "(sJ*G)/sN", "(sJ*G*N)/(sN*J)", "0"],
         ["(-sJ*G)/sN", "0", "0", "J/2"],
         ["(-sJ*G*N)/(sN*J)", "0", "0", "-N/2"],
         ["0", "-J/2", "N/2", "0"]],
        _FERMI_G, exclusions=("sJ", "sN"), derived={"J": "sJ**2", "N": "sN**2"},
        source="Case 14"),
    matrix_template(
        "case15", ("G", "sJ", "sN"),
        [["0", "(-sJ*G)/sN", "(-sJ*G*N)/(sN*J)", "0"],
         ["(sJ*G)/sN", "0", "0", "J/2"],
         ["(sJ*G*N)/(sN*J)", "0", "0", "-N/2"],
         ["0", "-J/2", "N/2", "0"]],
        _FERMI_G, exclusions=("sJ", "sN"), derived={"J": "sJ**2", "N": "sN**2"},
        source="Case 15"),
    matrix_template(
        "case16", "JKP",
        [["0", "-J/2", "0", "K"],
         ["J/2", "0", "K/2", "J/2"],
         ["0", "-K/2", "0", "0"],
         ["-K", "-J/2", "0", "0"]],
        [["0", "0", "0", "K/2"],
         ["0", "0", "-K/2", "0"],
         ["0", "-K/2", "P", "0"],
         ["K/2", "0", "0", "0"]],
        source="Case 16"),
    matrix_template(
        "case17", "CKUX",
        [["0", "-2*X", "(2*U*C)/X", "0"],
         ["2*X", "0", "(U*C+K**2)/K", "0"],
         ["(-2*U*C)/X", "-(U*C+K**2)/K", "0", "0"],
         ["0", "0", "0", "0"]],
        [["(X*U)/K", "U", "X", "K"],
         ["U", "(U*K)/X", "(U*C)/K", "(U*C)/X"],
         ["X", "(U*C)/K", "(X*K)/U", "C"],
         ["K", "(U*C)/X", "C", "(U*C**2)/(X*K)"]],
        exclusions=("K", "U", "X"), source="Case 17"),
    matrix_template(
        "case18", "KNU",
        [["0", "0", "N/2", "K"],
         ["0", "0", "-K/2", "0"],
         ["-N/2", "K/2", "0", "-N/2"],
         ["-K", "0", "N/2", "0"]],
        [["(-2*U*K)/N", "U", "0", "K/2"],
         ["U", "(-U*N)/(2*K)", "-K/2", "0"],
         ["0", "-K/2", "0", "0"],
         ["K/2", "0", "0", "0"]],
        exclusions=("K", "N"), source="Case 18"),
    matrix_template(
        "case19", "FJK",
        [["0", "J/2", "0", "K"],
         ["-J/2", "0", "-K/2", "J/2"],
         ["0", "K/2", "0", "0"],
         ["-K", "-J/2", "0", "0"]],
        [["F", "0", "0", "K/2"],
         ["0", "0", "-K/2", "0"],
         ["0", "-K/2", "0", "0"],
         ["K/2", "0", "0", "0"]],
        source="Case 19"),
    matrix_template(
        "case20", "KMN",
        [["0", "0", "(N*(-M+K))/(2*(M+K))", "M+K"],
         ["0", "0", "(M-K)/2", "0"],
         ["(N*(M-K))/(2*(M+K))", "(-M+K)/2", "0", "-N/2"],
         ["-(M+K)", "0", "N/2", "0"]],
        [["0", "0", "0", "(-M+K)/2"],
         ["0", "0", "(M-K)/2", "0"],
         ["0", "(M-K)/2", "0", "0"],
         ["(-M+K)/2", "0", "0", "0"]],
        exclusions=("M+K",), source="Case 20"),
    matrix_template(
        "case21", "KSXZ",
        [["0", "-X", "-Z", "K-S"],
         ["X", "0", "(K+S)/2", "(X*(K-S))/(K+S)"],
         ["Z", "-(K+S)/2", "0", "(Z*(-K+S))/(K+S)"],
         ["-K+S", "(X*(-K+S))/(K+S)", "(Z*(K-S))/(K+S)", "0"]],
        [["0", "0", "X", "(K+S)/2"],
         ["0", "0", "(K+S)/2", "-Z"],
         ["X", "(K+S)/2", "0", "0"],
         ["(K+S)/2", "-Z", "0", "0"]],
        exclusions=("K+S",), source="Case 21"),
    matrix_template(
        "case22", "BFKUXZ",
        [["0", "-X", "-Z", "K"],
         ["X", "0", "K/2", "X"],
         ["Z", "-K/2", "0", "-Z"],
         ["-K", "-X", "Z", "0"]],
        [["F", "U", "X", "K/2"],
         ["U", "B", "K/2", "-Z"],
         ["X", "K/2", "0", "0"],
         ["K/2", "-Z", "0", "0"]],
        source="Case 22"),
]


# Sub-families displayed after substituting a parameter value; the substitution
# is made before simplification, so no denominator of the parent survives.
RESTRICTED_CASES = [
    matrix_template(
        "case10|Z=0", "JX",
        [["0", "-X", "0", "0"],
         ["X", "0", "0", "J/2"],
         ["0", "0", "0", "0"],
         ["0", "-J/2", "0", "0"]],
        [["0", "0", "X", "0"],
         ["0", "0", "0", "0"],
         ["X", "0", "0", "0"],
         ["0", "0", "0", "0"]],
        source="Case 10 with Z = 0"),
    matrix_template(
        "case12|C=0", "KN",
        [["0", "0", "-N/2", "K"],
         ["0", "0", "K/2", "0"],
         ["N/2", "-K/2", "0", "-N/2"],
         ["-K", "0", "N/2", "0"]],
        [["0", "0", "0", "K/2"],
         ["0", "0", "-K/2", "0"],
         ["0", "-K/2", "0", "0"],
         ["K/2", "0", "0", "0"]],
        source="Case 12 with C = 0"),
    matrix_template(
        "case14|G=0", "JN",
        [["0", "0", "0", "0"],
         ["0", "0", "0", "J/2"],
         ["0", "0", "0", "-N/2"],
         ["0", "-J/2", "N/2", "0"]],
        [["0"] * 4] * 4,
        source="Case 14 with G = 0"),
]
