# %% [markdown]
# # Classifying both catalogs
#
# Enumerate every Calabi-Yau weight system of Fermat and quasi-diagonal type,
# tabulate the height of every residue class for each, and collect the
# finite values that occur.

# %%
from pathlib import Path
import tempfile

from delsarte.catalog import (build_atlas, classify_finite_heights, diff_atlases, enumerate_quasidiagonal_weights,
                              fermat_records, load_atlas, save_atlas)

fermat = fermat_records()
quasi = enumerate_quasidiagonal_weights()
print(len(fermat), "Fermat weight systems,", len(quasi), "quasi-diagonal")

# %%
print("Fermat:        ", classify_finite_heights(fermat))
print("quasi-diagonal:", classify_finite_heights(quasi))

# %% [markdown]
# Which weight systems produce the heights that only the quasi-diagonal
# family reaches?

# %%
atlas = build_atlas(quasi, "quasidiagonal")
only = set(atlas.finite_heights) - set(classify_finite_heights(fermat))
for r, s in zip(atlas.records, atlas.spectra):
    hit = sorted(only & s.finite_heights)
    if hit:
        print(r.weights, r.exponents, "d_A =", r.d_A, hit)

# %% [markdown]
# Normalization matters for the quasi-diagonal count: ordering all weights
# gives one count, ordering only the last three gives many more systems.

# %%
chain = enumerate_quasidiagonal_weights("chain")
print(len(chain), "systems when only q2..q4 are sorted")
extra = sorted(set(classify_finite_heights(chain)) - set(atlas.finite_heights))
print("extra finite heights:", extra)

# %% [markdown]
# Atlases persist as JSON and reload with every spectrum re-derived.

# %%
with tempfile.TemporaryDirectory() as tmp:
    path = save_atlas(atlas, Path(tmp) / "atlas.json")
    print(path.stat().st_size, "bytes;", "differences:", diff_atlases(atlas, load_atlas(path)))
