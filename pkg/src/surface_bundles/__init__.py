"""surface_bundles: monodromy factorizations of indecomposable surface bundles.

The construction runs a chain of recorded group maps

    pi1(S_h) --covering--> pi1(S_2) --label reading--> A(C5bar)
        --Kim--> A(C_{2g+1}bar) --Lonne--> B_{2g+1} --Birman-Hilden--> MCG(S_g)

and every stage is checkable: RAAG normal forms, Garside normal forms in the
braid group, and the symplectic action on H1 of the fiber. The invariants
module turns a verified factorization into H1 of the total space and its
signature; bundles glues factorizations and writes certificate reports.
"""

__version__ = "0.1.0"
