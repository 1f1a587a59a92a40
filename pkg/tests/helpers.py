"""Shared search utilities for terminality tests."""

from polyfun import hom_maps


def constrained_maps(x, y, constraints):
    """Natural maps c: x → y with compose(c, after) == expected pointwise,
    for every (after, expected) pair in `constraints`."""

    def allowed(j, i):
        opts = []
        for v in range(y.size(j)):
            if all(after.at(j, v) == expected.at(j, i)
                   for after, expected in constraints):
                opts.append(v)
        return opts

    return hom_maps(x, y, allowed=allowed)
