"""Tour of exact finite-field arithmetic: F_p, F_{p^m}, and subfield embeddings.

Run:  python demos/01_field_arithmetic.py
"""

from ffgcd import (
    elem_pow,
    make_embedding,
    make_field,
    multiplicative_order,
)

# Prime fields are plain modular arithmetic.
F7 = make_field(7, 1)
x, y = F7.elem(3), F7.elem(5)
print(f"over {F7}:  3 + 5 = {x + y},  3 * 5 = {x * y},  3 / 5 = {x / y}")
print(f"3 is a primitive root mod 7: order = {multiplicative_order(x)}")

# Extension fields get a canonical modulus: the lexicographically least
# monic irreducible, so every run and every machine agrees on the tables.
F4 = make_field(2, 2)
F16 = make_field(2, 4)
F25 = make_field(5, 2)
for ctx in (F4, F16, F25):
    print(f"{ctx}")

g = F4.gen
print(f"in F_4: g * (g+1) = {g * (g + 1)}   (g^2 reduces via g^2+g+1)")
print(f"g has order {multiplicative_order(g)} in F_4*")

# Lagrange: x^(q-1) = 1 for every nonzero x.
assert all(elem_pow(e, 24) == F25.one for e in F25.elements() if e)
print("every nonzero element of F_25 satisfies x^24 = 1")

# Embeddings realize F_4 inside F_16: the generator maps to the least root
# of g^2+g+1 in the big field, and the map preserves + and *.
emb = make_embedding(F4, F16)
img = emb.image_of_generator
print(f"F_4 -> F_16 sends g to {img}; check g^2+g+1 vanishes: {img * img + img + 1}")
for a in F4.elements():
    for b in F4.elements():
        assert emb.apply(a * b) == emb.apply(a) * emb.apply(b)
        assert emb.apply(a + b) == emb.apply(a) + emb.apply(b)
print("embedding is a ring homomorphism on all 16 pairs")
