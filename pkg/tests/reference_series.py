"""Leading coefficients of the single-step series, as polynomials in alpha.

Keys are (layer, index); values map a power of z to a function of alpha.
Every coefficient not listed, up to the highest listed power, is zero.
"""
LEADING_TERMS = {
    ("top", 0): {
        0: lambda a: 1,
        2: lambda a: 2 * a**2 + 1 - 2 * a,
        4: lambda a: 5 * a**4 - 10 * a**3 + 9 * a**2 - 4 * a + 1,
    },
    ("top", 1): {
        1: lambda a: a,
        3: lambda a: (3 * a**2 - 4 * a + 2) * a,
        5: lambda a: (8 * a**4 - 19 * a**3 + 20 * a**2 - 11 * a + 3) * a,
    },
    ("top", 2): {
        2: lambda a: a * (1 - a),
        4: lambda a: 2 * (1 - a) * (2 * a**2 + 1 - 2 * a) * a,
    },
    ("top", 3): {
        3: lambda a: (1 - a) * a**2,
        5: lambda a: (1 - a) * (5 * a**2 - 6 * a + 3) * a**2,
    },
    ("bottom", 0): {
        3: lambda a: a * (1 - a) ** 2,
        5: lambda a: (5 * a**2 - 4 * a + 2) * (1 - a) ** 2 * a,
    },
    ("bottom", 1): {
        2: lambda a: a * (1 - a),
        4: lambda a: 2 * (1 - a) * (2 * a**2 + 1 - 2 * a) * a,
    },
    ("bottom", 2): {
        3: lambda a: (1 - a) * a**2,
        5: lambda a: (1 - a) * (5 * a**2 - 6 * a + 3) * a**2,
    },
    ("bottom", 3): {
        4: lambda a: a**2 * (1 - a) ** 2,
        6: lambda a: 3 * a**2 * (2 * a**2 + 1 - 2 * a) * (1 - a) ** 2,
    },
}


def mismatches(series_of, alpha):
    """List of (state, power, got, want) where ``series_of(layer, index)`` disagrees."""
    bad = []
    for (layer, idx), terms in LEADING_TERMS.items():
        s = series_of(layer, idx)
        for k in range(max(terms) + 1):
            want = terms[k](alpha) if k in terms else 0
            if s[k] != want:
                bad.append(((layer, idx), k, s[k], want))
    return bad
