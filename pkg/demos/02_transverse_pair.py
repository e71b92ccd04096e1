"""
Twisting along a transverse pair
================================

For t_gamma^m t_delta^n the sign of m*n decides the picture. With opposite
signs every extra intersection point survives and the whole level is one
bucket. With equal signs a bigon on beta_1 can be isotoped away, and the
remaining points split into mn - 1 one-pair structures plus a distinguished
structure holding 2g - 3 pairs.
"""

from fibered_floer import build_diagram, compare_unperturbed, compute_rank, parse_word, simplify_isotopy

g = 4

for src in ["g^2 d^-3", "g^2 d^3"]:
    w = parse_word(src, g)
    raw = build_diagram(w)
    simple = simplify_isotopy(raw)
    result = compute_rank(w)
    print(f"\n{src}   case {result.case}   L = {result.lefschetz}")
    print("  alpha_1 / beta_1 points:", len(raw.slots[1]), "->", len(simple.slots[1]),
          "removed:", sorted(p.label for p in simple.removed))
    for s in result.per_structure:
        print(f"  {str(s.label):<16} chi {s.chi:>4}  essential pairs {s.essential_pairs:>3}  rank {s.rank}")
    print("  total rank", result.total_rank)
    cmp = compare_unperturbed(result)
    print(f"  unperturbed {cmp.unperturbed}, difference {cmp.difference}")

# %%
# The sandwich g^m1 d^n1 g^m2 is conjugate to g^(m1+m2) d^n1, and the ranks
# agree with the equal-sign formula.

a = compute_rank(parse_word("g^1 d^2 g^2", g))
b = compute_rank(parse_word("g^3 d^2", g))
print("\nsandwich", a.total_rank, "  conjugate two-letter word", b.total_rank)
