"""Tour of the quandle constructions.

Every constructor takes a finite group (or just a size) and returns an
operation table that provably satisfies the three quandle axioms; the
constructor re-verifies them on every build.
"""
from quandle_cayley import (
    alexander_quandle,
    conjugation_quandle,
    core_quandle,
    dihedral_quandle,
    generalized_alexander_quandle,
    inner_automorphism,
    is_involutory,
    make_cyclic,
    make_dihedral,
    make_symmetric,
    negation_automorphism,
    trivial_quandle,
    verify_quandle_axioms,
)


def show(q):
    report = verify_quandle_axioms(q.rhd)
    flavor = "involutory" if is_involutory(q) else "not involutory"
    print(f"\n{q.label}: order {q.order}, axioms ok={report.ok}, {flavor}")
    header = "      " + " ".join(f"{name:>5s}" for name in q.element_names)
    print(header)
    for x in range(q.order):
        row = " ".join(f"{q.element_names[q.rhd[x, y]]:>5s}" for y in range(q.order))
        print(f"{q.element_names[x]:>5s} {row}")


print("The trivial quandle: x |> y = x, nothing moves.")
show(trivial_quandle(3))

print("\nThe dihedral quandle R_n: reflections of an n-gon, x |> y = 2y - x.")
show(dihedral_quandle(5))

print("\nConjugation turns any group into a quandle: x |> y = y^-1 x y.")
show(conjugation_quandle(make_symmetric(3)))

print("\nThe core quandle x |> y = y x^-1 y is involutory for every group.")
show(core_quandle(make_dihedral(3)))

z8 = make_cyclic(8)
print("\nAlexander quandles twist an abelian group by an automorphism t:")
print("x |> y = t(x) + y - t(y).  With t = negation this is R_n again:")
q = alexander_quandle(z8, negation_automorphism(z8))
print(f"alexander(Z8, neg) table equals dihedral R8: "
      f"{(q.rhd == dihedral_quandle(8).rhd).all()}")

d4 = make_dihedral(4)
print("\nThe generalized form x |> y = phi(x y^-1) y works for any group.")
show(generalized_alexander_quandle(d4, inner_automorphism(d4, d4.index_of("r"))))
