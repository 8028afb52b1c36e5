#!/usr/bin/env python3
"""Extract the degree-18 monodromy triples from the LaTeX source table.

Kerned two-digit labels are unambiguous; bare digit runs are segmented in
every possible way and the unique segmentation giving permutations with
mu0 * mu1 * muInf = id (right action) is kept.
"""
import itertools
import json
import re
import sys

KERN = re.compile(r"\\:\\!1\\!\\!\\:(\d)(?:\\!\\:)?")


def segmentations(run):
    if not run:
        yield []
        return
    for size in (1, 2):
        head = run[:size]
        if len(head) < size:
            continue
        n = int(head)
        if 1 <= n <= 18 and head[0] != "0":
            for rest in segmentations(run[size:]):
                yield [n] + rest


def cycle_options(body):
    body = KERN.sub(lambda m: " K1" + m.group(1) + " ", body)
    body = body.replace("\\:", " ").replace("\\!", " ")
    parts = []
    for tok in body.split():
        if tok.startswith("K"):
            parts.append([[int(tok[1:])]])
        else:
            parts.append([s for s in segmentations(tok)])
    for combo in itertools.product(*parts):
        yield [x for seg in combo for x in seg]


def perm_options(text, repair=False):
    cycles = re.findall(r"\(([^()]*)\)", text)
    for combo in itertools.product(*[list(cycle_options(c)) for c in cycles]):
        flat = [x for c in combo for x in c]
        if sorted(flat) == list(range(1, 19)):
            yield [list(c) for c in combo]
        elif repair and len(flat) == 18:
            # a single misprinted label: one value twice, one value absent
            missing = set(range(1, 19)) - set(flat)
            dup = [x for x in set(flat) if flat.count(x) == 2]
            if len(missing) == 1 and len(dup) == 1:
                for pos, x in enumerate(flat):
                    if x == dup[0]:
                        fixed = flat[:pos] + [missing.pop()] + flat[pos + 1:]
                        missing = set(range(1, 19)) - set(flat)
                        out, k = [], 0
                        for c in combo:
                            out.append(fixed[k:k + len(c)])
                            k += len(c)
                        yield out


def to_map(cycles):
    m = {}
    for c in cycles:
        for i, x in enumerate(c):
            m[x] = c[(i + 1) % len(c)]
    return m


def derived_inf(m0, mu1):
    prod = {x: mu1[m0[x]] for x in range(1, 19)}
    inv = {v: k for k, v in prod.items()}
    seen, cycles = set(), []
    for x in range(1, 19):
        if x in seen:
            continue
        c, y = [x], inv[x]
        seen.add(x)
        while y != x:
            c.append(y)
            seen.add(y)
            y = inv[y]
        cycles.append(c)
    return cycles


def main(path):
    lines = open(path).read().splitlines()
    start = next(i for i, l in enumerate(lines) if l.startswith("1 & (123)(567)"))
    body = "\n".join(lines[start:start + 60])
    body = body.split("\\end{array}")[0]
    rows = body.split("\\\\")
    mu1 = {}
    for k in range(1, 19, 2):
        mu1[k], mu1[k + 1] = k + 1, k
    out = []
    for row in rows:
        _, rest = row.split("&", 1)
        perms, suffix = rest.rsplit("&", 1)
        suffix = KERN.sub(lambda m: "1" + m.group(1), suffix)
        suffix = suffix.replace("\\!", "").replace("\\:", "")
        cusp = [int(x) for x in suffix.split()]
        a, b = perms.split("),\n", 1)
        a += ")"
        found = []
        repaired = False
        for repair in (False, True):
            for c0 in perm_options(a, repair):
                m0 = to_map(c0)
                for ci in perm_options(b, repair):
                    mi = to_map(ci)
                    lengths = sorted((len(c) for c in ci), reverse=True)
                    if lengths == cusp and all(mi[mu1[m0[x]]] == x for x in range(1, 19)):
                        found.append((c0, ci))
            if found:
                repaired = repair
                break
        if not found:
            # muInf is determined by mu0 and mu1; rebuild it when the
            # printed cycles cannot be read consistently
            for c0 in perm_options(a):
                m0 = to_map(c0)
                ci = derived_inf(m0, mu1)
                if sorted((len(c) for c in ci), reverse=True) == cusp:
                    found.append((c0, ci))
                    repaired = "muInf"
        if len(found) != 1:
            sys.exit(f"row {len(out)+1}: {len(found)} readings")
        c0, ci = found[0]
        lengths = sorted((len(c) for c in ci), reverse=True)
        if lengths != cusp:
            sys.exit(f"row {len(out)+1}: cusp mismatch {lengths} vs {cusp}")
        fmt = lambda cs: "".join("(" + " ".join(map(str, c)) + ")" for c in cs)
        rec = {"line": len(out) + 1, "mu0": fmt(c0), "muInf": fmt(ci), "cusp": cusp}
        if repaired:
            rec["repaired"] = "muInf recomputed" if repaired == "muInf" else "one label"
            print(f"line {rec['line']}: repaired one misprinted label", file=sys.stderr)
        out.append(rec)
    json.dump(out, sys.stdout, indent=1)


if __name__ == "__main__":
    if len(sys.argv) != 2:
        sys.exit("usage: parse_triples.py SOURCE.md")
    main(sys.argv[1])
