# Integer double description for cones {x : A x >= 0}.
from __future__ import annotations

import math
from functools import reduce


def _normalize(v):
    g = reduce(math.gcd, v, 0)
    if g == 0:
        return None
    return tuple(x // g for x in v)


def _normalize_line(v):
    v = _normalize(v)
    if v is None:
        return None
    lead = next(x for x in v if x)
    return v if lead > 0 else tuple(-x for x in v)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def cone_generators(rows, d):
    """Extreme rays and a lineality basis of ``{x in R^d : a.x >= 0 for a in rows}``.

    ``rows`` are integer vectors. Rays are returned primitive, modulo the
    lineality space; the output is minimal but in no canonical order.
    """
    lines = [tuple(int(i == j) for j in range(d)) for i in range(d)]
    rays: list[tuple] = []
    zsets: list[frozenset] = []
    done = 0  # number of processed constraints
    for a in rows:
        a = tuple(int(x) for x in a)
        if not any(a):
            continue
        vals = [_dot(a, l) for l in lines]
        k = next((i for i, v in enumerate(vals) if v), None)
        idx = done
        if k is not None:
            l0 = lines[k]
            al0 = vals[k]
            if al0 < 0:
                l0 = tuple(-x for x in l0)
                al0 = -al0
            new_lines = []
            for i, l in enumerate(lines):
                if i == k:
                    continue
                v = vals[i]
                nl = tuple(al0 * x - v * y for x, y in zip(l, l0)) if v else l
                nl = _normalize_line(nl)
                if nl is not None:
                    new_lines.append(nl)
            new_rays = []
            new_z = []
            for r, z in zip(rays, zsets):
                v = _dot(a, r)
                nr = tuple(al0 * x - v * y for x, y in zip(r, l0)) if v else r
                new_rays.append(_normalize(nr))
                new_z.append(z | {idx})
            # l0 is tight on every earlier constraint (it was a line)
            new_rays.append(_normalize(l0))
            new_z.append(frozenset(range(idx)))
            lines, rays, zsets = new_lines, new_rays, new_z
        else:
            vals = [_dot(a, r) for r in rays]
            pos = [i for i, v in enumerate(vals) if v > 0]
            neg = [i for i, v in enumerate(vals) if v < 0]
            zero = [i for i, v in enumerate(vals) if v == 0]
            keep = pos + zero
            new_rays = [rays[i] for i in keep]
            new_z = [zsets[i] | {idx} if vals[i] == 0 else zsets[i] for i in keep]
            need = d - len(lines) - 2
            for p in pos:
                for q in neg:
                    common = zsets[p] & zsets[q]
                    if len(common) < need:
                        continue
                    if any(
                        i != p and i != q and common <= zsets[i] for i in range(len(rays))
                    ):
                        continue
                    vp, vq = vals[p], vals[q]
                    nr = tuple(vp * x - vq * y for x, y in zip(rays[q], rays[p]))
                    nr = _normalize(nr)
                    if nr is not None:
                        new_rays.append(nr)
                        new_z.append(common | {idx})
            rays, zsets = new_rays, new_z
        done += 1
    # defensive dedupe (identical rays can only arise from duplicate input rows)
    seen = {}
    for r in rays:
        if r is not None and any(r):
            seen.setdefault(r, None)
    return list(seen), lines
