# %% [markdown]
# # Residue spectra for large Fermat degrees
#
# Two weighted Fermat threefolds: degree 966 with weights (2, 21, 138, 322, 483)
# and degree 1806 with weights (1, 42, 258, 602, 903), the largest Fermat
# degree there is.

# %%
from delsarte import from_fermat, height
from delsarte.arith import primes_in_class
from delsarte.height import format_height, spectrum_for

x966 = from_fermat((2, 21, 138, 322, 483))
x1806 = from_fermat((1, 42, 258, 602, 903))

# %%
sp = spectrum_for(x966)
print("d_A =", sp.d_A, " phi =", sp.phi)
for h, ts in sp.grouped.items():
    print(f"{format_height(h):>4}  {len(ts):4} classes  e.g. {ts[:3]}")

# %% [markdown]
# Residue 43 mod 966 has height 22; every prime in that class does.

# %%
for p in primes_in_class(43, 966, 5):
    print(p, height(x966, p).height)

# %% [markdown]
# For degree 1806 most classes are infinite; the finite ones cluster at
# divisors of 42.

# %%
sp = spectrum_for(x1806)
print(sp.counts())
for h, ts in sp.grouped.items():
    print(f"{format_height(h):>4}  {ts[:3]}")

# %% [markdown]
# Every record carries its witness: the orbit norms for finite heights, and
# the first norm of 2 or more for infinite ones.

# %%
print(sp.classes[421].to_dict()["witness"]["norms"][:10], "...")
print(sp.classes[5].to_dict())
