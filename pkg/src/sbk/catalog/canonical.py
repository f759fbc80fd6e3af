"""Nonequivalent osp(2|2) r-matrices as wedge expressions, plus the printed
block forms that the wedge expressions abbreviate."""

from dataclasses import dataclass

from .templates import RMatrixTemplate, matrix_template, wedge_template

BIN = "binary"

# x (X+ ^ X- + s1 V+ ^ W- + s2 V- ^ W+) + t x H ^ B
def _standard(x, s1, s2, hb=None, y=None):
    terms = [(x, "X+", "X-"), (f"{s1}*{x}", "V+", "W-"), (f"{s2}*{x}", "V-", "W+")]
    if hb is not None:
        terms.append((f"{hb}*{x}", "H", "B"))
    if y is not None:
        terms.append((y, "H", "B"))
    return terms


E0 = [("2*x", "H", "B"), ("x", "X+", "X-"), ("x", "V+", "W-"), ("x", "V-", "W+")]
E5 = [("-1", {"B": 1, "H": 1}, "X+"), ("1", "V+", "W+")]
HALF_VPVP = ("1/2", "V+", "V+")

CANONICAL = [
    wedge_template("b2", (), [("1", "H", "X+")], source="b2"),
    wedge_template("c0", "x", [("x", "H", "X+"), ("1", "B", "X+")], source="c0"),
    wedge_template("a2", [("alpha", BIN), ("beta", BIN)],
                   [("alpha", {"H": 1, "B": -1}, "X+"), ("beta", "V+", "V+")], source="a2"),
    wedge_template("h1", "xy", _standard("x", 1, -1, y="y"), source="h1"),
    wedge_template("f2", "xy", _standard("x", 1, 1, y="y"), source="f2",
                   note="the mistyped X+ ^ X- term restored"),
    wedge_template("d1", "x", [("x", "X+", "X-"), ("x", "V+", "W-"),
                               ("x/2", "V-", "V-"), ("x/2", "W+", "W+")], source="d1"),
    wedge_template("j2", (), [("-2", "H", "X+"),
                              ("1/2", {"V+": 1, "W+": 1}, {"V+": 1, "W+": 1})], source="j2"),
    wedge_template("g", ["x", ("alpha", BIN)],
                   _standard("x", 1, -1, hb=2) + [("alpha/2", "W+", "W+")], source="g",
                   note="alpha term is 1/2 W+ ^ W+, the form Case 12 reduces to; "
                        "see g_printed"),
    wedge_template("a1", ["x", ("alpha", BIN)],
                   _standard("x", -1, 1, hb=-2) + [("alpha/2", "V+", "V+")], source="a1",
                   note="V ^ W signs as Case 19 reduces to; see a1_printed"),
    wedge_template("e0", "x", E0, source="e0"),
    wedge_template("e1", "xy", E0 + [("y", "V+", "V+"), ("1", "V+", "V-"), ("1/2", "V-", "V-")],
                   source="e1"),
    wedge_template("e2", "x", E0 + [HALF_VPVP, ("1", "V+", "V-")], source="e2"),
    wedge_template("e3", "x", E0 + [HALF_VPVP, ("1/2", "V-", "V-")], source="e3"),
    wedge_template("e4", "x", E0 + [HALF_VPVP], source="e4"),
    wedge_template("f1", "x", [("1", {"B": "x", "H": -1}, "X+"), ("1", "V+", "W+")],
                   source="f1"),
    wedge_template("e5", (), E5, source="e5"),
    wedge_template("e6", "y", E5 + [("y/2", "V+", "V+"), ("1/2", "V-", "V-")], source="e6"),
    wedge_template("e7", (), E5 + [("1", "V+", "V-")], source="e7"),
    wedge_template("e8", (), E5 + [HALF_VPVP], source="e8"),
    wedge_template("e9", (), [("1", "V+", "V-")], source="e9"),
    wedge_template("e10", (), [HALF_VPVP], source="e10"),
]

# members of the list proper, in printed order
SUMMARY_IDS = tuple(t.id for t in CANONICAL)

# families that satisfy CYBE everywhere; every other summary family only at x = 0
CYBE_ALWAYS = frozenset({"b2", "c0", "a2", "j2", "f1", "e5", "e6", "e7", "e8", "e9", "e10"})

# intermediate names used in the case analysis; several coincide with list members
VARIANTS = [
    wedge_template("b1", "x", _standard("x", -1, 1), source="b1"),
    wedge_template("c1", "xy", [("y", "H", "B")] + _standard("x", -1, 1), source="c1"),
    wedge_template("i1", "xy", _standard("x", -1, 1, y="y"), source="i1"),
    wedge_template("k1", "xy", _standard("x", 1, 1, y="y"), source="k1"),
    wedge_template("k2", "x", [("-1", "H", "X+"), ("1", "V+", "W+"), ("x", "B", "X+")],
                   source="k2"),
    wedge_template("j1", "x", [("x", "X+", "X-"), ("x", "V+", "W-"),
                               ("x/2", "V-", "V-"), ("x/2", "W+", "W+")], source="j1"),
    wedge_template("g1", "x", _standard("x", 1, -1, hb=2), source="g1",
                   note="the garbled fermionic term read as V+ ^ W- - V- ^ W+"),
    wedge_template("g1.5", (), [("1", {"H": 1, "B": -1}, "X+")], source="g1.5"),
    wedge_template("g2", "x", _standard("x", 1, -1, hb=2) + [("1/2", "W+", "W+")],
                   source="g2", note="g1 plus 1/2 W+ ^ W+, which is what Case 12 reaches; see g2_printed"),
    wedge_template("f0", (), [("1", "B", "X+")], source="f0"),
    wedge_template("i2", (), [("1", "B", "X+")], source="i2"),
]

# The Summary expressions exactly as printed where they differ from the forms the
# case reductions actually reach.  With alpha = 1 and x != 0 their coboundary
# violates co-Jacobi, so they are kept only to document the discrepancy.
PRINTED_INVALID = [
    wedge_template("g_printed", ["x", ("alpha", BIN)],
                   _standard("x", 1, -1, hb=2) + [("alpha/2", "V+", "V+")], source="g"),
    wedge_template("a1_printed", ["x", ("alpha", BIN)],
                   _standard("x", 1, -1, hb=-2) + [("alpha/2", "V+", "V+")], source="a1"),
    wedge_template("g2_printed", "x", _standard("x", 1, -1, hb=2) + [HALF_VPVP], source="g2"),
]

@dataclass(frozen=True)
class PrintedForm:
    """A block matrix printed after a transformation, the wedge family it is said
    to equal, and the parameter map (family parameter -> expression in the printed
    ones).  ``agrees`` records whether the two really coincide."""

    template: RMatrixTemplate
    family: str
    param_map: dict
    agrees: bool = True
    note: str = ""


PRINTED_FORMS = [PrintedForm(*row) for row in [
    (matrix_template(
        "a1~", ["K", ("alpha", BIN)],
        [["0", "0", "0", "K"], ["0", "0", "-K/2", "0"], ["0", "K/2", "0", "0"],
         ["-K", "0", "0", "0"]],
        [["alpha", "0", "0", "-K/2"], ["0", "0", "K/2", "0"], ["0", "K/2", "0", "0"],
         ["-K/2", "0", "0", "0"]], source="Case 19 (a)"),
     "a1_printed", {"x": "-K/2", "alpha": "alpha"}, True,
     "matches the printed a1 expression; the fermionic K/2 entries of the actual "
     "reduction of Case 19 have the opposite sign"),
    (matrix_template(
        "b1~", "K",
        [["0", "0", "0", "0"], ["0", "0", "-K", "0"], ["0", "K", "0", "0"],
         ["0", "0", "0", "0"]],
        [["0", "0", "0", "K"], ["0", "0", "-K", "0"], ["0", "-K", "0", "0"],
         ["K", "0", "0", "0"]], source="Case 3 with L = 0, Y = 0"),
     "b1", {"x": "-K"}),
    (matrix_template(
        "c1~", "KM",
        [["0", "0", "0", "M"], ["0", "0", "K", "0"], ["0", "-K", "0", "0"],
         ["-M", "0", "0", "0"]],
        [["0", "0", "0", "K"], ["0", "0", "-K", "0"], ["0", "-K", "0", "0"],
         ["K", "0", "0", "0"]], source="Case 4 with J = 0"),
     "h1", {"x": "K", "y": "M"}, True,
     "this matrix has the h1 sign pattern; the c1 expression is its image under S"),
    (matrix_template(
        "d1~", "M",
        [["0", "0", "0", "0"], ["0", "0", "-M", "0"], ["0", "M", "0", "0"],
         ["0", "0", "0", "0"]],
        [["0", "0", "0", "-M"], ["0", "-M", "0", "0"], ["0", "0", "-M", "0"],
         ["-M", "0", "0", "0"]], source="Case 6"),
     "d1", {"x": "-M"}),
    (matrix_template(
        "e0~", "K",
        [["0", "0", "0", "K"], ["0", "0", "K/2", "0"], ["0", "-K/2", "0", "0"],
         ["-K", "0", "0", "0"]],
        [["0", "0", "0", "K/2"], ["0", "0", "K/2", "0"], ["0", "K/2", "0", "0"],
         ["K/2", "0", "0", "0"]], source="Case 22 with X = Z = F = U = B = 0"),
     "e0", {"x": "K/2"}),
    (matrix_template(
        "f1~", "J",
        [["0", "-1", "0", "0"], ["1", "0", "0", "J/2"], ["0", "0", "0", "0"],
         ["0", "-J/2", "0", "0"]],
        [["0", "0", "1", "0"], ["0", "0", "0", "0"], ["1", "0", "0", "0"],
         ["0", "0", "0", "0"]], source="Case 10, Z = 0"),
     "f1", {"x": "-J/2"}),
    (matrix_template(
        "f2~", "xy",
        [["0", "0", "0", "y"], ["0", "0", "x", "0"], ["0", "-x", "0", "0"],
         ["-y", "0", "0", "0"]],
        [["0", "0", "0", "x"], ["0", "0", "x", "0"], ["0", "x", "0", "0"],
         ["x", "0", "0", "0"]], source="Case 10, Z != 0"),
     "f2", {"x": "x", "y": "y"}),
    (matrix_template(
        "g1~", "K",
        [["0", "0", "0", "K"], ["0", "0", "K/2", "0"], ["0", "-K/2", "0", "0"],
         ["-K", "0", "0", "0"]],
        [["0", "0", "0", "K/2"], ["0", "0", "-K/2", "0"], ["0", "-K/2", "0", "0"],
         ["K/2", "0", "0", "0"]], source="Case 12, C = 0"),
     "g1", {"x": "K/2"}),
    (matrix_template(
        "g2~", "K",
        [["0", "0", "0", "K"], ["0", "0", "K/2", "0"], ["0", "-K/2", "0", "0"],
         ["-K", "0", "0", "0"]],
        [["1", "0", "0", "K/2"], ["0", "0", "-K/2", "0"], ["0", "-K/2", "0", "0"],
         ["K/2", "0", "0", "0"]], source="Case 12, C != 0"),
     "g2_printed", {"x": "K/2"}, True,
     "reached only if S is applied to the V ^ V term alone"),
    (matrix_template(
        "h1~", "KL",
        [["0", "0", "0", "2*K+L"], ["0", "0", "-L/2", "0"], ["0", "L/2", "0", "0"],
         ["-2*K-L", "0", "0", "0"]],
        [["0", "0", "0", "-L/2"], ["0", "0", "L/2", "0"], ["0", "L/2", "0", "0"],
         ["-L/2", "0", "0", "0"]], source="Case 2"),
     "h1", {"x": "-L/2", "y": "2*K+L"}),
    (matrix_template(
        "i1~", ("G", "sNJ"),
        [["0", "0", "0", "sNJ"], ["0", "0", "-G", "0"], ["0", "G", "0", "0"],
         ["-sNJ", "0", "0", "0"]],
        [["0", "0", "0", "G"], ["0", "0", "-G", "0"], ["0", "-G", "0", "0"],
         ["G", "0", "0", "0"]], source="Case 14"),
     "i1", {"x": "-G", "y": "sNJ"}),
    (matrix_template(
        "j1~", "K",
        [["0", "0", "0", "0"], ["0", "0", "K", "0"], ["0", "-K", "0", "0"],
         ["0", "0", "0", "0"]],
        [["0", "0", "0", "K"], ["0", "K", "0", "0"], ["0", "0", "K", "0"],
         ["K", "0", "0", "0"]], source="Case 17, C = 0"),
     "j1", {"x": "K"}),
    (matrix_template(
        "j2~", (),
        [["0", "-2", "0", "0"], ["2", "0", "0", "0"], ["0", "0", "0", "0"],
         ["0", "0", "0", "0"]],
        [["1", "0", "1", "0"], ["0", "0", "0", "0"], ["1", "0", "1", "0"],
         ["0", "0", "0", "0"]], source="Case 17, C != 0, K^2 = UC"),
     "j2", {}),
    (matrix_template(
        "k1~", "KS",
        [["0", "0", "0", "K-S"], ["0", "0", "(K+S)/2", "0"], ["0", "-(K+S)/2", "0", "0"],
         ["-K+S", "0", "0", "0"]],
        [["0", "0", "0", "(K+S)/2"], ["0", "0", "(K+S)/2", "0"], ["0", "(K+S)/2", "0", "0"],
         ["(K+S)/2", "0", "0", "0"]], source="Case 21 (b)"),
     "k1", {"x": "(K+S)/2", "y": "K-S"}),
    (matrix_template(
        "k2~", "KS",
        [["0", "1", "0", "0"], ["-1", "0", "0", "(K-S)/(K+S)"], ["0", "0", "0", "0"],
         ["0", "(-K+S)/(K+S)", "0", "0"]],
        [["0", "0", "1", "0"], ["0", "0", "0", "0"], ["1", "0", "0", "0"],
         ["0", "0", "0", "0"]], exclusions=("K+S",), source="Case 21 (a)"),
     "k2", {"x": "(K-S)/(K+S)"}, False,
     "printed H ^ X+ and B ^ X+ signs are opposite to the k2 expression; the "
     "reduction of Case 21 (a) lands on the k2 expression with x = (S-K)/(K+S)"),
]]
