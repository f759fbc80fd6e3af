"""Equivalence witnesses between the raw case families and the canonical list.

Each entry records where it comes from: ``printed`` (steps and parameter map as
displayed), ``printed-corrected`` (printed steps with a repaired sign or parameter
map, explained in ``note``) or ``derived`` (no step printed; found by hand and
checked here).  Step formulas may refer to the source parameters as well as to
the sampled variables.  Square roots are sampled through their root: ``sX`` with
``X = sX**2`` and so on.
"""

from ..autos import S_STEP, EquivalenceWitness, Step


def _w(id, source, target, variables, source_params, steps, target_params, **kw):
    if isinstance(variables, str):
        variables = tuple(variables)
    return EquivalenceWitness(id, source, target, tuple(variables), dict(source_params),
                              tuple(steps), dict(target_params), **kw)


def _same(names):
    return {n: n for n in names}


def _skip(id, source, target, reason):
    return EquivalenceWitness(id, source, target, (), {}, (), {}, status="skip", reason=reason)


WITNESSES = [
    # -- cases related by S or by renaming ------------------------------------
    _w("13->1", "case13", "case1", "CJKM", _same("CJKM"), [S_STEP],
       dict(J="-J", K="-K", L="-M", U="C")),
    _w("8->22", "case8", "case22", "CPSTXZ", _same("CPSTXZ"), [S_STEP],
       dict(X="X", Z="Z", K="S", F="P", U="C", B="T")),
    _w("18->12", "case18", "case12", "KNU", _same("KNU"), [S_STEP],
       dict(N="-N", K="-K", C="U")),
    _w("15->14", "case15", "case14", ("G", "sJ", "sN"), _same(("G", "sJ", "sN")), [],
       dict(G="G", sJ="-sJ", sN="sN")),
    _w("20->2", "case20", "case2", "KMN", _same("KMN"), [S_STEP],
       dict(K="-K", L="K-M", N="-N"), origin="printed-corrected",
       note="a renaming alone cannot work: X+ ^ X- and V+ ^ W- enter Case 20 with "
            "opposite relative sign; S fixes it"),
    _w("5->19", "case5", "case19", "BLN", _same("BLN"), [Step("0", "1", "1", "0")],
       dict(F="B", K="-L", J="N"), origin="derived"),
    _w("7->19", "case7", "case19", "MNT", _same("MNT"), [Step("0", "1", "1", "0", 1)],
       dict(F="T", K="M", J="-N"), origin="derived"),
    _w("16->19", "case16", "case19", "JKP", _same("JKP"), [S_STEP],
       dict(F="P", K="-K", J="-J"), origin="derived"),

    # -- Case 19 -> a1, a2 ------------------------------------------------------
    _w("19->a1", "case19", "a1", ("t", "J", "K"), dict(F="t**2", J="J", K="K"),
       [Step("1/t", "0", "-J/(2*t*K)", "t")], dict(x="-K/2", alpha="1")),
    _w("19->a1[F=0]", "case19", "a1", "JK", dict(F="0", J="J", K="K"),
       [Step("1", "0", "-J/(2*K)", "1")], dict(x="-K/2", alpha="0")),
    _w("19->a2", "case19", "a2", ("J", "s"), dict(F="2*s**2", J="J", K="0"),
       [Step("1/s", "0", "0", "J/(2*s)")], dict(alpha="1", beta="1"), origin="derived",
       note="the (+-) and (WV) scalings written out for J, F != 0"),
    _w("19->a2[F=0]", "case19", "a2", "J", dict(F="0", J="J", K="0"),
       [Step("1", "0", "0", "J/2")], dict(alpha="1", beta="0"), origin="derived"),

    # -- Case 3 -> b1, b2 -------------------------------------------------------
    _w("3->b1", "case3", "b1", "KLYd", _same("KLY"),
       [Step("1", "-(2*K+L)/Y", "0", "1"), Step("0", "2*d*K/Y", "-Y/(2*d*K)", "d")],
       dict(x="-K"), origin="printed-corrected",
       note="the first step sends L to -2K rather than 0, which flips X+ ^ X-; the "
            "second step then needs b and c of opposite sign to the printed ones"),
    _w("3->b2", "case3", "b2", ("L", "sY"), dict(K="0", L="L", Y="sY**2"),
       [Step("1", "-(2*K+L)/Y", "0", "1"), Step("1/sY", "0", "0", "sY")], {},
       exclusions=("Y",)),

    # -- Case 4 -> c1 -----------------------------------------------------------
    _w("4->c1", "case4", "c1", "JKLM", _same("JKLM"),
       [Step("1", "-(L+K)*M/(J*L)", "0", "1"), Step("1", "0", "J*L/(2*K*M)", "1"), S_STEP],
       dict(x="K", y="K*M/L"), origin="printed-corrected",
       note="the first step yields Case 4 at L = -K with M' = -K M / L (not M / L); the "
            "two printed steps end on h1(K, M'), and S takes that to c1(K, -M')"),

    # -- Case 6 -> d1 -----------------------------------------------------------
    _w("6->d1", "case6", "d1", "MUs", dict(M="M", U="U", Z="s**2*U"),
       [Step("-s*U/M", "s", "-1/s", "0")], dict(x="-M")),

    # -- Case 10 -> f0, f1, f2 --------------------------------------------------
    _w("10->f0", "case10|Z=0", "f0", "J", dict(J="J", X="0"),
       [Step("1", "0", "0", "-J/2")], {}, origin="derived",
       note="the (+-) rescaling written out"),
    _w("10->f1", "case10", "f1", ("sX", "J"), dict(X="sX**2", Z="0", J="J"),
       [Step("1/sX", "0", "0", "sX")], dict(x="-J/(2*sX**2)"), origin="printed-corrected",
       note="the transformed X+ ^ B entry is J/(2X), not J/2, so x = -J/(2X)"),
    _w("10->f2", "case10", "f2", ("sX", "sZ", "J"), dict(X="sX**2", Z="sZ**2", J="J"),
       [Step("1/sX", "-sZ/2", "1/sZ", "sX/2")], dict(x="-sX*sZ", y="-J*sZ/sX")),

    # -- Case 12 -> g1, g1.5, g2 --------------------------------------------------
    _w("12->g1", "case12", "g1", "KN", dict(C="0", K="K", N="N"),
       [Step("1", "N/(2*K)", "0", "1")], dict(x="K/2")),
    _w("12->g1.5", "case12|C=0", "g1.5", "N", dict(K="0", N="N"),
       [Step("0", "-N/2", "1", "0", 1)], {}, origin="derived",
       note="the rescaling also has to exchange X+ and X-"),
    _skip("12->g2[printed]", "case12", "g2",
          "the printed transformation contains Z, which does not occur in Case 12"),
    _w("12->g2", "case12", "g2", "KNs", dict(K="K", N="N", C="-N*s**2/(2*K)"),
       [Step("1", "N/(2*K)", "0", "1"), Step("1", "0", "0", "s")], dict(x="K/2"),
       origin="derived",
       note="the g1 step leaves -2KC/N W+ (x) W+, which a (WV) scaling normalizes; "
            "no S is needed"),

    # -- Case 2 -> h1 -----------------------------------------------------------
    _w("2->h1", "case2", "h1", "KLN", _same("KLN"),
       [Step("1", "N/(2*(2*K+L))", "0", "1")], dict(x="-L/2", y="2*K+L")),

    # -- Case 14 -> i1, i2 ------------------------------------------------------
    _w("14->i1", "case14", "i1", ("G", "sJ", "sN"), _same(("G", "sJ", "sN")),
       [Step("1/2", "sN/sJ", "-sJ/(2*sN)", "1")], dict(x="-G", y="sN*sJ")),
    _w("14->i2", "case14|G=0", "i2", "J", dict(J="J", N="0"),
       [Step("1", "0", "0", "-J/2")], {}, origin="derived",
       note="the rescaling after N = 0 written out"),

    # -- Case 17 -> j1, j2 ------------------------------------------------------
    _w("17->j1", "case17", "j1", "KXs", dict(C="0", K="K", U="s**2*X", X="X"),
       [Step("s", "0", "-s*X/K", "1/s")], dict(x="K")),
    _w("17->j2", "case17", "j2", ("C", "t", "s"),
       dict(C="C", K="C*t**2", U="C*t**4", X="s**2"),
       [Step("-1/s", "C*t**2/s", "0", "-s"), Step("1/t", "0", "0", "1/t")], {},
       origin="printed-corrected",
       note="U = K^2/C and K = C t^2; the final normalization by K/C is the second step"),

    # -- Case 21 -> k1, k2 ------------------------------------------------------
    _w("21->k1[Z=0]", "case21", "k1", "KSX", dict(K="K", S="S", X="X", Z="0"),
       [Step("0", "-1", "1", "X/(K+S)")], dict(x="-(K+S)/2", y="S-K"),
       origin="printed-corrected",
       note="a = 0 forces H -> -H, so the result is k1 at (-(K+S)/2, S-K)"),
    _w("21->k1", "case21", "k1", "KSZq",
       dict(K="K", S="S", Z="Z", X="(q**2-((K+S)/2)**2)/Z"),
       [Step("Z/(2*q)", "1", "(K+S)/(4*q)-1/2", "((K+S)/2+q)/Z")],
       dict(x="q", y="2*q*(K-S)/(K+S)"), origin="printed-corrected",
       note="q = sqrt(XZ + ((K+S)/2)^2); the K of the printed matrix is (K+S)/2, and "
            "the result is k1 at x = q, y = 2q(K-S)/(K+S)"),
    _w("21->k2", "case21", "k2", "KSs",
       dict(K="K", S="S", Z="-s**2", X="((K+S)/2)**2/s**2"),
       [Step("0", "s", "-1/s", "-(K+S)/(2*s)")], dict(x="(S-K)/(K+S)"),
       origin="printed-corrected",
       note="sqrt(-Z) = s and XZ + ((K+S)/2)^2 = 0; the result is the k2 expression "
            "at x = (S-K)/(K+S)"),

    # -- Case 22 subcases: the normal forms as restrictions of Case 22 -------------
    _skip("22->e[rank 2]", "case22", "e0",
          "no transformation printed for bringing a rank-2 r_VW to X = Z = 0"),
    _skip("22->e[c9']", "case22", "e5",
          "the rank-1 reduction is conditioned on the undefined symbol c9'"),
    _w("22->e0", "case22", "e0", "x", dict(B="0", F="0", K="2*x", U="0", X="0", Z="0"), [],
       dict(x="x"), origin="derived"),
    _w("22->e1", "case22", "e1", "xy", dict(B="1", F="2*y", K="2*x", U="1", X="0", Z="0"),
       [], dict(x="x", y="y"), origin="derived"),
    _w("22->e2", "case22", "e2", "x", dict(B="0", F="1", K="2*x", U="1", X="0", Z="0"), [],
       dict(x="x"), origin="derived"),
    _w("22->e3", "case22", "e3", "x", dict(B="1", F="1", K="2*x", U="0", X="0", Z="0"), [],
       dict(x="x"), origin="derived"),
    _w("22->e4", "case22", "e4", "x", dict(B="0", F="1", K="2*x", U="0", X="0", Z="0"), [],
       dict(x="x"), origin="derived"),
    _w("22->e5", "case22", "e5", "", dict(B="0", F="0", K="0", U="0", X="1", Z="0"), [], {},
       origin="derived"),
    _w("22->e6", "case22", "e6", "y", dict(B="1", F="y", K="0", U="0", X="1", Z="0"), [],
       dict(y="y"), origin="derived"),
    _w("22->e7", "case22", "e7", "", dict(B="0", F="0", K="0", U="1", X="1", Z="0"), [], {},
       origin="derived"),
    _w("22->e8", "case22", "e8", "", dict(B="0", F="1", K="0", U="0", X="1", Z="0"), [], {},
       origin="derived"),
    _w("22->e9", "case22", "e9", "", dict(B="0", F="0", K="0", U="1", X="0", Z="0"), [], {},
       origin="derived"),
    _w("22->e10", "case22", "e10", "", dict(B="0", F="1", K="0", U="0", X="0", Z="0"), [], {},
       origin="derived"),
]

# The witnesses named in the acceptance list, grouped by claim.
REQUIRED = {
    "13->1": ("13->1",), "8->22": ("8->22",), "18->12": ("18->12",), "15->14": ("15->14",),
    "20->2": ("20->2",), "3->{b1,b2}": ("3->b1", "3->b2"), "4->c1": ("4->c1",),
    "6->d1": ("6->d1",), "10->{f0,f1,f2}": ("10->f0", "10->f1", "10->f2"),
    "2->h1": ("2->h1",), "14->{i1,i2}": ("14->i1", "14->i2"),
    "17->{j1,j2}": ("17->j1", "17->j2"), "19->{a1,a2}": ("19->a1", "19->a2"),
    "21->{k1,k2}": ("21->k1", "21->k2"),
}
SKIPPED_REQUIRED = ("12->g2[printed]", "22->e[c9']")


def self_witness(template) -> EquivalenceWitness:
    """Identity witness from a family to itself (harness smoke test).  Binary
    parameters are held at 1; continuous ones are sampled."""
    values = {n: (n if kind == "continuous" else "1") for n, kind in template.params}
    variables = tuple(n for n, kind in template.params if kind == "continuous")
    return _w(f"{template.id}->{template.id}", template.id, template.id, variables,
              values, [], values, origin="derived")
