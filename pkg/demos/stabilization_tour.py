"""Stabilize partial open books and watch what survives.

Positive stabilization plumbs on a positive Hopf band: the surface gains a
band (chi drops by one), the book gains a basis arc, and the supported
contact structure does not change.  The tour runs the same three steps on
a tight book and on an overtwisted one.

Run with:  python3 demos/stabilization_tour.py
"""

from plumbook import (
    StarPlumbing,
    TwistedAnnulus,
    associated_pob,
    contact_verdict,
    euler_characteristic,
    positive_stabilization,
    veering_report,
)


def tour(name, halftwists, steps=3):
    star = StarPlumbing((TwistedAnnulus(halftwists),))
    _ss, _system, pob = associated_pob(star)
    print(f"{name}: annulus with {halftwists:+d} half twists")
    for step in range(steps + 1):
        chi = euler_characteristic(pob.surface)
        veering = ",".join(v.value for v in veering_report(pob).verdicts)
        verdict = contact_verdict(pob)
        print(f"  after {step} stabilization(s): chi {chi}, veering [{veering}], {verdict.status.value}")
        if step < steps:
            pob = positive_stabilization(pob)
    print(f"  {verdict.reason}")
    print()


def main():
    tour("positive Hopf band", +2)
    tour("negative Hopf band", -2)
    print("the left-veering arc keeps witnessing overtwistedness no matter how")
    print("many positive bands are plumbed on: stabilization never repairs a book")


if __name__ == "__main__":
    main()
