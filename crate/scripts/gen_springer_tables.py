#!/usr/bin/env python3
"""Generate the static unipotent/Springer tables for types B2, C2, B3, C3, G2.

Classical types use Lusztig's symbol algorithm; rows not in the image of the
trivial local system are attached to the class whose symbol has the same
entries (similarity classes). Orientation: regular class <-> trivial character.
Run from the repository root; writes crates/core/data/springer/*.json.
"""
import json
from collections import Counter
from pathlib import Path

OUT = Path("crates/core/data/springer")
VERSION = 1


def partitions(n, maxpart=None):
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def bipartitions(n):
    for a in range(n, -1, -1):
        for al in partitions(a):
            for be in partitions(n - a):
                yield (al, be)


def pname(lam):
    parts = []
    for v, m in sorted(Counter(lam).items(), reverse=True):
        parts.append(f"{v}" if m == 1 else f"{v}^{m}")
    return "(" + ",".join(parts) + ")"


def bname(al, be):
    return "".join(map(str, al)) + "." + "".join(map(str, be))


def eigenvalues(lam):
    ev = []
    for k in lam:
        ev.extend(range(k - 1, -k, -2))
    return sorted(ev, reverse=True)


def dual_partition(lam):
    return [sum(1 for x in lam if x > i) for i in range(max(lam, default=0))]


def classical(family, n):
    size = 2 * n + 1 if family == "B" else 2 * n
    bad_parity = 0 if family == "B" else 1  # parts of this parity need even multiplicity
    classes = []
    for lam in partitions(size):
        c = Counter(lam)
        if any(v % 2 == bad_parity and m % 2 for v, m in c.items()):
            continue
        h = eigenvalues(lam)[:n]
        weights = [h[i] - h[i + 1] for i in range(n - 1)]
        weights.append(h[n - 1] if family == "B" else 2 * h[n - 1])
        lt = dual_partition(lam)
        odd = sum(1 for x in lam if x % 2)
        if family == "C":
            dim_bx = (sum(x * x for x in lt) // 2 + odd // 2 - n) // 2
            k = len({x for x in lam if x % 2 == 0})
        else:
            dim_bx = (sum(x * x for x in lt) // 2 - odd // 2 - n) // 2
            k = max(len({x for x in lam if x % 2 == 1}) - 1, 0)
        ax = "1" if k == 0 else ("Z/2" if k == 1 else f"(Z/2)^{k}")
        classes.append(dict(lam=lam, name=pname(lam), weights=weights, A_x=ax, dim_Bx=dim_bx))

    def symbol_of_partition(lam):
        parts = sorted(lam)
        if len(parts) % 2 == 0:
            parts = [0] + parts
        star = [p + i for i, p in enumerate(parts)]
        top_par = 0 if family == "C" else 1
        top = sorted((x - top_par) // 2 for x in star if x % 2 == top_par)
        bot = sorted((x - (1 - top_par)) // 2 for x in star if x % 2 != top_par)
        al = [x - i for i, x in enumerate(top)]
        be = [x - i for i, x in enumerate(bot)]
        return (tuple(sorted((x for x in al if x), reverse=True)),
                tuple(sorted((x for x in be if x), reverse=True)))

    def class_of_symbol(al, be):
        # rebuild lambda* from the symbol rows, then merge pairs of parts of the
        # wrong parity: (a, b) -> (a + 1, b - 1)
        m = max(len(al) - 1, len(be), 0) + 1
        top = sorted(list(al) + [0] * (m + 1 - len(al)))
        bot = sorted(list(be) + [0] * (m - len(be)))
        xi = [x + i for i, x in enumerate(top)]
        eta = [x + i for i, x in enumerate(bot)]
        if family == "C":
            star = sorted([2 * x for x in xi] + [2 * y + 1 for y in eta])
        else:
            star = sorted([2 * x + 1 for x in xi] + [2 * y for y in eta])
        lam = [x - i for i, x in enumerate(star)]
        bad = sorted(v for v in set(lam) if v and v % 2 == bad_parity and lam.count(v) % 2)
        if len(bad) % 2:
            bad = [0] + bad
        for a, b in zip(bad[::2], bad[1::2]):
            ia = max(i for i, v in enumerate(lam) if v == a)
            ib = min(i for i, v in enumerate(lam) if v == b)
            lam[ia] += 1
            lam[ib] -= 1
        return tuple(sorted((x for x in lam if x), reverse=True))

    by_lam = {c["lam"]: c for c in classes}
    rows = []
    used = set()
    for c in classes:
        bp = symbol_of_partition(c["lam"])
        assert bp not in used
        assert class_of_symbol(*bp) == c["lam"]
        used.add(bp)
        rows.append(dict(cls=c["name"], rho1="1", bp=bp))
    extra = Counter()
    for bp in bipartitions(n):
        if bp in used:
            continue
        c = by_lam[class_of_symbol(*bp)]
        extra[c["name"]] += 1
        rows.append(dict(cls=c["name"], rho1=None, bp=bp))
    for r in rows:
        if r["rho1"] is None:
            total = extra[r["cls"]]
            r["rho1"] = "sgn" if total == 1 else None
    # number the remaining ones deterministically
    counter = Counter()
    for r in rows:
        if r["rho1"] is None:
            counter[r["cls"]] += 1
            r["rho1"] = f"rho_{counter[r['cls']]}"
    # checks: extra rows only on classes with nontrivial A_x, and the b-value
    # of a Springer character is d_u for rho = 1 and larger otherwise
    def nfun(l):
        return sum(i * x for i, x in enumerate(l))
    dims = {c["name"]: c for c in classes}
    for r in rows:
        al, be = r["bp"]
        b = 2 * nfun(al) + 2 * nfun(be) + sum(be)
        c = dims[r["cls"]]
        if r["rho1"] == "1":
            assert b == c["dim_Bx"], (r, b)
        else:
            assert c["A_x"] != "1" and b > c["dim_Bx"], (r, b)
    assert len(rows) == sum(1 for _ in bipartitions(n))
    source = f"Lusztig symbols for {family}{n}; cf. Carter, Finite Groups of Lie Type, ch. 13"
    return {
        "version": VERSION,
        "type": f"{family}{n}",
        "group": f"{'SO' if family == 'B' else 'Sp'}{size}",
        "orientation": "regular<->trivial",
        "classes": [dict(name=c["name"], weights=c["weights"], A_x=c["A_x"], dim_Bx=c["dim_Bx"], source=source)
                    for c in classes],
        "springer": [dict(**{"class": r["cls"]}, rho1=r["rho1"], weyl_char=bname(*r["bp"]), source=source)
                     for r in rows],
    }


def g2():
    src = "Bala-Carter classes and Springer correspondence for G2; cf. Carter, Finite Groups of Lie Type, ch. 13"
    classes = [
        ("1", [0, 0], "1", 6),
        ("A1", [0, 1], "1", 3),
        ("A1~", [1, 0], "1", 2),
        ("G2(a1)", [0, 2], "S3", 1),
        ("G2", [2, 2], "1", 0),
    ]
    springer = [
        ("G2", "1", "phi1,0"),
        ("G2(a1)", "1", "phi2,1"),
        ("G2(a1)", "refl", "phi'1,3"),
        ("A1~", "1", "phi2,2"),
        ("A1", "1", "phi''1,3"),
        ("1", "1", "phi1,6"),
    ]
    return {
        "version": VERSION,
        "type": "G2",
        "group": "G2",
        "orientation": "regular<->trivial",
        "classes": [dict(name=a, weights=w, A_x=x, dim_Bx=d, source=src) for a, w, x, d in classes],
        "springer": [{"class": c, "rho1": r, "weyl_char": w, "source": src} for c, r, w in springer],
    }


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    docs = [classical("B", 2), classical("C", 2), classical("B", 3), classical("C", 3), g2()]
    for d in docs:
        (OUT / f"{d['type']}.json").write_text(json.dumps(d, indent=1) + "\n")


if __name__ == "__main__":
    main()
