"""Pure-Python sparse term kernels.

Terms are dicts mapping exponent tuples to nonzero coefficients. Every kernel
returns a fresh dict without zero entries and never mutates its inputs.
"""

IMPLEMENTATION = "python"


def add_terms(a, b, sign=1):
    out = dict(a)
    get = out.get
    for e, c in b.items():
        v = get(e, 0) + sign * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def mul_terms(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = {}
    get = out.get
    bitems = list(b.items())
    for ea, ca in a.items():
        for eb, cb in bitems:
            e = tuple([x + y for x, y in zip(ea, eb)])
            out[e] = get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def scale_terms(a, c):
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}


def scale_exponents(a, factor):
    return {tuple([x * factor for x in e]): c for e, c in a.items()}


def reduce_exponent_mod(a, pos, modulus):
    out = {}
    get = out.get
    for e, c in a.items():
        if 0 <= e[pos] < modulus:
            r = e
        else:
            r = e[:pos] + (e[pos] % modulus,) + e[pos + 1:]
        out[r] = get(r, 0) + c
    return {e: c for e, c in out.items() if c}
