"""The exact-arithmetic substrate: truncated power series over rationals.

Everything the counting engine does reduces to a handful of operations on
dense, order-tagged coefficient vectors with Fraction entries.
"""

from fractions import Fraction

from ktrees import (
    Series,
    add,
    exp_series,
    integer_coeffs,
    monomial_x,
    mul,
    scale,
    substitute_power,
)

N = 8

# Build 1/(1-x) the honest way: exp(sum_m x^m / m) = exp(-log(1-x)).
log_arg = Series(N, [Fraction(0)] + [Fraction(1, m) for m in range(1, N + 1)])
geometric = exp_series(log_arg)
print("exp(sum x^m/m)     =", integer_coeffs(geometric), "(all ones, as it should be)")

# Multiplication is the truncated Cauchy product.
print("(1/(1-x))^2        =", integer_coeffs(mul(geometric, geometric)))

# Substitution x -> x^m spreads coefficients onto multiples of m.
print("substitute x->x^3  =", integer_coeffs(substitute_power(geometric, 3)))

# exp turns sums into products, exactly.
f = scale(monomial_x(N), 2)                       # 2x
g = substitute_power(monomial_x(N), 2)            # x^2
lhs = exp_series(add(f, g))
rhs = mul(exp_series(f), exp_series(g))
print("exp(f+g) == exp(f)exp(g):", lhs == rhs)

# Intermediate values are rationals; integer extraction is checked.
half = scale(monomial_x(N), Fraction(1, 2))
print("exp(x/2) coefficients:", exp_series(half).coeffs[:4])
try:
    integer_coeffs(exp_series(half))
except ValueError as exc:
    print("integer_coeffs correctly refuses:", exc)
