#!/usr/bin/env python3
# The Hodge star on the Euclidean exterior algebra, the star-sandwich
# (cotranslation) form of transformations, and the versors that convert
# between the two forms.

import numpy as np

from cl33 import (
    E,
    Multivector,
    NotHodgeCompatible,
    OMEGA_V,
    Paravector,
    apply_hodge_sandwich,
    apply_sandwich,
    embed_paravector,
    hodge_conjugate_versor,
    hodge_star,
    outer_product,
    rotation_versor,
    scale_versor,
    translation_versor,
)

e1, e2, e3 = E
W = outer_product

# The star swaps grade k with grade 3-k inside the Euclidean exterior
# algebra and squares to the identity there.
print("star 1        =", hodge_star(Multivector.scalar(1.0)), " (volume trivector)")
print("star e1       =", hodge_star(e1))
print("star (e1^e2)  =", hodge_star(W(e1, e2)))
print("star Omega_V  =", hodge_star(OMEGA_V))
print("star(star e2) =", hodge_star(hodge_star(e2)))

# The star of a point: the weight rides on the volume element, the position
# on the dual bivectors.
P = Paravector(1.0, [1.0, 0.0, 0.0])
print("\nstar(1 + e1) =", hodge_star(embed_paravector(P)))

# Any sandwich versor that rescales the volume element by a constant can be
# moved to the star side.  The conversion returns the star-form versor and
# its scale.
rot = rotation_versor([1, 0, 0], [0, 1, 0], 0.9)
h = hodge_conjugate_versor(rot)
print("\nrotation star-form scale:", h.lam)
p = Paravector(1.0, [0.3, -1.0, 2.0])
print("sandwich form:     ", apply_sandwich(rot, p))
print("star-sandwich form:", apply_hodge_sandwich(h, p))

# The non-uniform scale rescales the volume, so its star-form versor carries
# the compensating prefactor e^(t/2).
t = 0.8
sc = scale_versor([0, 0, 1], t)
h = hodge_conjugate_versor(sc)
print("\nscale star-form prefactor:", h.lam, "= e^(t/2) =", np.exp(t / 2))
print("sandwich form:     ", apply_sandwich(sc, p))
print("star-sandwich form:", apply_hodge_sandwich(h, p))

# Translations cannot be rewritten in star-sandwich form: the volume-scaling
# condition fails with a residual proportional to the displacement.
try:
    hodge_conjugate_versor(translation_versor([1.0, 0.0, 0.0]))
except NotHodgeCompatible as exc:
    print("\ntranslation rejected:", exc)
