"""
Tilting a square algebra at one vertex
======================================

A selfinjective algebra need not come from a Brauer tree.  Here the algebra
has four vertices on a square with arrows both ways along each side.  The
two-term complex at vertex 2 is checked to be tilting, and the dimensions of
maps between its summands are compared with the algebra presented by the
reflected quiver.
"""

#%%
import numpy as np

from brauer import build_algebra, injective_presentation, verify_tilting
from brauer.presets import square_algebra, square_reflected

lam = build_algebra(square_algebra(), p=2)
print("dim", lam.dim, "selfinjective", lam.is_selfinjective, "Nakayama", lam.nakayama)
print(lam.cartan())

#%%
# The injective presentation of the simple at 2: P_2 maps to P_1 + P_3.
pres = injective_presentation(lam, 2)
print("E0 =", pres.e0, "E1 =", pres.e1)

#%%
# Tilting checks, with the Cartan matrix of the reflected presentation as the
# prediction for the endomorphism dimensions.
gamma = build_algebra(square_reflected(), p=2)
report = verify_tilting(lam, 2, predicted=gamma.cartan(), subject="square")
print(report.table())
print(np.array(report.endo))
