#!/usr/bin/env python3
"""Build catalog/strata.v1.json from the hand transcription below.

The checksum is FNV-1a 64 over the compact, key-sorted JSON of "rows"; the
C++ loader recomputes it, so edit this script and regenerate instead of
touching the JSON by hand.
"""
import json
import os
import sys

sys.path.insert(0, os.path.dirname(__file__))
import parse_triples  # noqa: E402

# id: root, mw, dim, index, |ker|, Shimada no., Shimada MW, group, note
STRATA = [
    (0, "", [1], 18, 1, 2, None, "", "SL(2,Z)", ""),
    (1, "8A1", [2], 10, 3, 2, 99, "[1],[2]", "Gamma1(2)", ""),
    (2, "6A2", [3], 6, 4, 1, 559, "[1],[3]", "Gamma1(3)", ""),
    (3, "4A3", [2], 6, 6, 2, 547, "[1],[2]", "Gamma0(4)", ""),
    (4, "12A1", [2, 2], 6, 6, 2, 565, "[2,2]", "Gamma(2)", ""),
    (5, "2A7", [2], 4, 6, 1, 1134, "[1],[2]", "Gamma0(4)bar", "-id not in Gamma"),
    (6, "2A3+8A1", [2, 2], 4, 6, 1, 1223, "[2,2]", "Gamma(2)bar", "-id not in Gamma"),
    (7, "4A3+2A1", [4], 4, 6, 1, 1215, "[4],[2],[1]", "Gamma1(4)", ""),
    (8, "D4+2A6", [1], 2, 9, 2, 2171, "[1]", None, "non-congruence"),
    (9, "D4+2A5+2A1", [2], 2, 9, 2, 2179, "[2]", None, "non-congruence"),
    (10, "D4+2A4+2A2", [1], 2, 9, 2, 2190, "[1]", None, "non-congruence"),
    (11, "D4+2A3+2A2+2A1", [2], 2, 9, 2, 2198, "[2]", None, "non-congruence"),
    (12, "2D4+A8", [1], 2, 12, 2, 2148, "[1]", None, "twisted Beauville"),
    (13, "2D4+A7+A1", [2], 2, 12, 2, 2149, "[2]", None, "twisted Beauville"),
    (14, "2D4+A5+A2+A1", [2], 2, 12, 2, 2150, "[2]", None, "twisted Beauville"),
    (15, "2D4+2A4", [1], 2, 12, 2, 2151, "[1]", None, "twisted Beauville"),
    (16, "2D4+2A3+2A1", [2, 2], 2, 12, 2, 2152, "[2,2]", None, "twisted Beauville"),
    (17, "2D4+4A2", [1], 2, 12, 2, 2153, "[1]", None, "twisted Beauville"),
    (18, "2A8", [3], 2, 12, 1, 2242, "[1],[3]", None, "2:1 Beauville"),
    (19, "2A7+2A1", [4], 2, 12, 1, 2262, "[1],[2],[4]", None, "2:1 Beauville"),
    (20, "2A5+2A2+2A1", [6], 2, 12, 1, 2322, "[1],[2],[3],[6]", None, "2:1 Beauville"),
    (21, "4A4", [5], 2, 12, 1, 2345, "[1],[5]", None, "2:1 Beauville"),
    (22, "4A3+4A1", [4, 2], 2, 12, 1, 2368, "[2,2],[4,2]", None, "2:1 Beauville"),
    (23, "8A2", [3, 3], 2, 12, 1, 2373, "[3,3]", None, "2:1 Beauville"),
]
HIGH = [  # index 18: root, mw, Shimada no.
    ("D4+A13", [1], 2762), ("D4+A12+A1", [1], 2763), ("D4+A11+A2", [2], 2764),
    ("D4+A11+2A1", [2], 2765), ("D4+A10+A2+A1", [1], 2766), ("D4+A9+A4", [1], 2767),
    ("D4+A9+A3+A1", [2], 2768), ("D4+A9+2A2", [1], 2769), ("D4+A9+A2+2A1", [2], 2770),
    ("D4+A8+A5", [1], 2771), ("D4+A8+A4+A1", [1], 2772), ("D4+A7+A4+2A1", [2], 2773),
    ("D4+A7+A3+A2+A1", [2], 2774), ("D4+A7+2A2+2A1", [2], 2775), ("D4+2A6+A1", [1], 2776),
    ("D4+2A6+A1", [1], 2776), ("D4+A6+A5+A2", [1], 2777), ("D4+A6+A4+A2+A1", [1], 2778),
    ("D4+A6+A3+2A2", [1], 2779), ("D4+2A5+A3", [2], 2780), ("D4+2A5+3A1", [2, 2], 2781),
    ("D4+A5+2A4", [1], 2782), ("D4+A5+A4+A3+A1", [2], 2783), ("D4+A5+2A3+2A1", [2, 2], 2784),
    ("D4+2A4+2A2+A1", [1], 2785), ("D4+3A3+2A2", [2], 2786),
]
for k, (root, mw, shi) in enumerate(HIGH):
    STRATA.append((24 + k, root, mw, 1, 18, 2, shi, str(mw).replace(" ", ""), None, "non-congruence"))

CUSPS9 = [[7, 1, 1], [6, 2, 1], [5, 3, 1], [4, 3, 2]]
CUSPS12 = [[9, 1, 1, 1], [8, 2, 1, 1], [6, 3, 2, 1], [5, 5, 1, 1], [4, 4, 2, 2], [3, 3, 3, 3]]
CUSPS18 = [[14, 1, 1, 1, 1], [13, 2, 1, 1, 1], [12, 3, 1, 1, 1], [12, 2, 2, 1, 1], [11, 3, 2, 1, 1],
           [10, 5, 1, 1, 1], [10, 4, 2, 1, 1], [10, 3, 3, 1, 1], [10, 3, 2, 2, 1], [9, 6, 1, 1, 1],
           [9, 5, 2, 1, 1], [8, 5, 2, 2, 1], [8, 4, 3, 2, 1], [8, 3, 3, 2, 2], [7, 7, 2, 1, 1],
           [7, 7, 2, 1, 1], [7, 6, 3, 1, 1], [7, 5, 3, 2, 1], [7, 4, 3, 3, 1], [6, 6, 4, 1, 1],
           [6, 6, 2, 2, 2], [6, 5, 5, 1, 1], [6, 5, 4, 2, 1], [6, 4, 4, 2, 2], [5, 5, 3, 3, 2],
           [4, 4, 4, 3, 3]]


def passport(i):
    low = {0: [[1], [1], [1]], 1: [[3], [2, 1], [2, 1]], 2: [[3, 1], [2, 2], [3, 1]],
           3: [[3, 3], [2, 2, 2], [4, 1, 1]], 4: [[3, 3], [2, 2, 2], [2, 2, 2]],
           5: [[3, 3], [2, 2, 2], [4, 1, 1]], 6: [[3, 3], [2, 2, 2], [2, 2, 2]],
           7: [[3, 3], [2, 2, 2], [4, 1, 1]]}
    if i in low:
        return low[i]
    if i <= 11:
        return [[3] * 3, [2] * 4 + [1], CUSPS9[i - 8]]
    if i <= 23:
        return [[3] * 4, [2] * 6, CUSPS12[(i - 12) % 6]]
    return [[3] * 6, [2] * 9, CUSPS18[i - 24]]


# j_E: degree, ramification over j=0 (A) and j=1728 (B), over one cusp,
# printed exponent k of the simple-branching term 2^k, number of I0* fibres
def j_e(i):
    d = {"A": [], "B": [], "cusp": None, "printed_simple": 0, "n_Istar": 0, "n_IVstar": 0}
    if i == 0:
        d.update(degree=24, A=[[3] * 8], B=[[2] * 12], printed_simple=18)
    elif i == 1:
        d.update(degree=8, B=[[2, 2, 2, 2]], printed_simple=10)
    elif i == 2:
        d.update(degree=6, A=[[3, 3]], printed_simple=6)
    elif i in (3, 4):
        d.update(degree=4, printed_simple=6)
    elif i in (5, 6, 7):
        width = {5: 4, 6: 2, 7: 1}[i]
        d.update(degree=4, cusp={"width": width, "parts": [2, 2]}, printed_simple={5: 4, 6: 6, 7: 6}[i])
    elif i <= 11:
        d.update(degree=2, B=[[2]], printed_simple=1, n_Istar=1)
    elif i <= 17:
        d.update(degree=1, n_Istar=2)
    elif i <= 23:
        d.update(degree=2, printed_simple=2)
    else:
        d.update(degree=1, n_Istar=1)
    return d


# isotropic subgroup generators as per-component class labels
G = {
    1: [["1"] * 8], 2: [["1"] * 6], 3: [["2"] * 4],
    4: [["1"] * 8 + ["0"] * 4, ["1"] * 4 + ["0"] * 4 + ["1"] * 4],
    5: [["4", "4"]],
    6: [["2", "2", "1", "1", "1", "1", "0", "0", "0", "0"], ["2", "2", "0", "0", "0", "0", "1", "1", "1", "1"]],
    7: [["1"] * 6],
    9: [["v", "3", "3", "0", "0"]], 11: [["v", "2", "2", "0", "0", "1", "1"]],
    13: [["v", "v", "4", "0"]], 14: [["v", "v", "3", "0", "1"]],
    16: [["v", "v", "2", "2", "0", "0"], ["c", "c", "2", "0", "1", "1"]],
    18: [["3", "3"]], 19: [["2", "2", "1", "1"]], 20: [["1"] * 6], 21: [["2", "2", "1", "1"]],
    22: [["1"] * 6 + ["0", "0"], ["2", "2", "0", "0", "1", "1", "1", "1"]],
    23: [["1"] * 6 + ["0", "0"], ["2", "2", "1", "1", "0", "0", "1", "1"]],
    26: [["v", "6", "0"]], 27: [["v", "6", "0", "0"]], 30: [["v", "5", "0", "1"]],
    32: [["v", "5", "0", "1", "0"]], 35: [["v", "4", "0", "1", "1"]], 36: [["v", "4", "2", "0", "0"]],
    37: [["v", "4", "0", "0", "1", "1"]], 43: [["v", "3", "3", "0"]],
    44: [["v", "3", "3", "0", "0", "0"], ["c", "3", "0", "1", "1", "1"]],
    46: [["v", "3", "0", "2", "1"]],
    47: [["v", "3", "2", "0", "1", "0"], ["c", "3", "0", "2", "0", "1"]],
    49: [["v", "2", "2", "2", "0", "0"]],
}

# I1, I2, I3, |S_M/(+-1)|, genus; rows 38 and 39 share one line
RANK17 = {
    24: (12, 2, 1, 6, 1), 25: (12, 2, 1, 6, 1), 26: (16, 2, 1, 4, 0), 27: (8, 2, 1, 4, 0),
    28: (24, 2, 1, 12, 1), 29: (72, 2, 1, 12, 4), 30: (8, 2, 1, 4, 1), 31: (96, 2, 1, 48, 7),
    32: (8, 2, 1, 4, 0), 33: (72, 2, 1, 12, 4), 34: (24, 2, 1, 12, 1), 35: (8, 1, 1, 8, 0),
    36: (16, 2, 1, 8, 1), 37: (32, 1, 2, 32, 0), 38: (48, 1, 1, 24, 1), 39: (48, 1, 1, 24, 1),
    40: (48, 2, 1, 24, 7), 41: (48, 2, 1, 24, 1), 42: (96, 1, 1, 96, 13), 43: (32, 2, 1, 16, 3),
    44: (24, 1, 1, 24, 0), 45: (96, 2, 1, 48, 7), 46: (16, 2, 1, 8, 1), 47: (16, 2, 1, 8, 0),
    48: (192, 1, 2, 192, 1), 49: (384, 1, 2, 384, 5),
}
# components, |S_M/(+-1)|, degree, genus, genus of the stratum
COVERING = {35: (2, 8, 4, 0, 0), 37: (4, 32, 8, 0, 0), 38: (2, 24, 24, 1, 0), 39: (2, 24, 24, 1, 0),
            42: (2, 96, 48, 13, 0), 44: (2, 24, 12, 0, 0), 48: (4, 192, 48, 1, 0), 49: (4, 384, 96, 5, 0)}
INDEX_GAMMA = {26: (2, 2), 29: (3, 2), 33: (3, 2), 38: (1, 1), 39: (1, 1)}
TWO_EMBEDDINGS = {17, 21, 37, 48, 49}


def fnv1a64(data: bytes) -> int:
    h = 0xcbf29ce484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001b3) & 0xFFFFFFFFFFFFFFFF
    return h


def canonical(obj) -> bytes:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True).encode()


def build(source):
    triples = json.loads(_run_triples(source))
    rows = []
    for (i, root, mw, dim, index, ker, shi, shi_mw, group, note) in STRATA:
        r = {
            "id": i, "root": root, "mw": mw, "dim": dim, "psl_index": index, "kernel": ker,
            "contains_minus_id": ker == 2, "shimada": shi, "shimada_mw": shi_mw, "group": group,
            "note": note, "passport": passport(i), "jE": j_e(i), "G": G.get(i, []),
            "embeddings": 2 if i in TWO_EMBEDDINGS else 1, "genus_size": 1,
        }
        if i >= 24:
            t = triples[i - 24]
            assert t["cusp"] == r["passport"][2], (i, t["cusp"])
            r["triple"] = {"line": t["line"], "mu0": t["mu0"],
                           "mu1": "".join(f"({k} {k + 1})" for k in range(1, 19, 2)),
                           "muInf": t["muInf"], "repaired": t.get("repaired", "")}
            I1, I2, I3, sm, g = RANK17[i]
            r["rank17"] = {"I1": I1, "I2": I2, "I3": I3, "sM_mod_sign": sm, "genus": g}
        if i in COVERING:
            c, sm, d, g, gb = COVERING[i]
            r["covering"] = {"components": c, "sM_mod_sign": sm, "degree": d, "genus": g, "genus_bpt": gb}
        if i in INDEX_GAMMA:
            a, b = INDEX_GAMMA[i]
            r["gamma_indices"] = {"in_O_plus": a, "over_plus": b}
        if i in (38, 39):
            r["conjugate_partner"] = 77 - i
        rows.append(r)
    return {"schema": "ambi-strata", "version": 1,
            "checksum": "fnv1a64:%016x" % fnv1a64(canonical(rows)), "rows": rows}


def _run_triples(source):
    import contextlib
    import io
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(io.StringIO()):
        parse_triples.main(source)
    return buf.getvalue()


if __name__ == "__main__":
    if len(sys.argv) not in (2, 3):
        sys.exit("usage: build_catalog.py SOURCE.md [OUT.json]")
    source = sys.argv[1]
    out = sys.argv[2] if len(sys.argv) > 2 else "catalog/strata.v1.json"
    cat = build(source)
    # one row per line keeps diffs readable
    with open(out, "w") as f:
        f.write('{"schema": "%s", "version": %d, "checksum": "%s", "rows": [\n'
                % (cat["schema"], cat["version"], cat["checksum"]))
        f.write(",\n".join(json.dumps(r, sort_keys=True) for r in cat["rows"]))
        f.write("\n]}\n")
