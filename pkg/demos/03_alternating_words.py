"""
Alternating-sign words and the trace
====================================

When the twist powers alternate in sign, the number of points on
alpha_1 / beta_1 is the trace T of the product of the transvections with
absolute-value entries, and the rank is 2g - 4 + T. T grows
exponentially with word length; the integers stay exact.
"""

from itertools import product

from fibered_floer import abs_trace, compute_rank, lefschetz, parse_word

g = 3
print(f"{'word':<28} {'T':>6} {'L':>7} {'rank':>6}")
for k in (1, 2, 3):
    for ms in product((1, 2), repeat=k):
        src = " ".join(f"g^{m} d^-{m}" for m in ms)
        w = parse_word(src, g)
        print(f"{src:<28} {abs_trace(w):>6} {lefschetz(w):>7} {compute_rank(w).total_rank:>6}")

# %%
# A long word: entries far past 64 bits are no problem for the trace and
# Lefschetz number (the generator enumeration itself is linear in T).

long_word = parse_word(" ".join(["g^3 d^-3"] * 12), g)
print("\nT for (g^3 d^-3)^12 =", abs_trace(long_word))
print("L =", lefschetz(long_word))
