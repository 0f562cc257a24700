"""Brute-force member counts for C(3, {0, 2}), d <= 100.

Every a/d is expanded by long division in exact arithmetic. Terminating
values also try the expansion ending in repeated (b - 1).
"""
import json
from fractions import Fraction
from math import gcd

B, DIGITS, T = 3, {0, 2}, 100


def in_c(x: Fraction) -> bool:
    if x == 1:
        return B - 1 in DIGITS
    seen, digits, r = {}, [], x
    while r not in seen:
        seen[r] = len(digits)
        r *= B
        digits.append(int(r))
        r -= int(r)
    pre, per = digits[: seen[r]], digits[seen[r]:]
    if all(g in DIGITS for g in pre + per):
        return True
    if per == [0]:
        while pre and pre[-1] == 0:
            pre.pop()
        if pre:
            pre[-1] -= 1
            return all(g in DIGITS for g in pre) and B - 1 in DIGITS
    return False


def counts(coprime: bool):
    reduced = all_pairs = interior_pairs = 0
    for d in range(1, T + 1):
        if coprime and gcd(d, B) != 1:
            continue
        for a in range(d + 1):
            if in_c(Fraction(a, d)):
                all_pairs += 1
                interior_pairs += 0 < a < d
                reduced += gcd(a, d) == 1
    return {"reduced": reduced, "reduced_without_endpoints": reduced - 2, "all": all_pairs,
            "all_without_endpoints": interior_pairs}


if __name__ == "__main__":
    out = {"base": B, "digits": sorted(DIGITS), "max_denominator": T,
           "any_denominator": counts(False), "coprime_to_base": counts(True)}
    print(json.dumps(out, indent=2))
