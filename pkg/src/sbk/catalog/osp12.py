"""r-matrices of osp(1|2) + u(1), generators (H, X+, X-, Z, Q+, Q-)."""

from .templates import wedge_template

_XX_QQ = [("x", "X+", "X-"), ("2*x", "Q+", "Q-")]

OSP12_TEMPLATES = [
    wedge_template("o1", (), [("1", "H", "X+")], algebra="osp12_u1", source="r_1"),
    wedge_template("o2", (), [("1", "Z", "X+")], algebra="osp12_u1", source="r_2"),
    wedge_template("o3", (), [("1", "H", "X+"), ("1", "Z", "X+")], algebra="osp12_u1",
                   source="r_3"),
    wedge_template("o4", (), [("1", "H", "X+"), ("-1", "Q+", "Q+")], algebra="osp12_u1",
                   source="r_4"),
    wedge_template("o5", (), [("1", "H", "X+"), ("-1", "Q+", "Q+"), ("1", "Z", "X+")],
                   algebra="osp12_u1", source="r_5"),
    wedge_template("o6", "x", _XX_QQ, algebra="osp12_u1", source="r_6"),
    wedge_template("o7", "x", _XX_QQ + [("1", "H", "Z")], algebra="osp12_u1", source="r_7"),
]

# the two x-families; the remaining five carry no parameter
X_FAMILIES = ("o6", "o7")
