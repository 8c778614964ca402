# %% [markdown]
# # A quasi-diagonal threefold with height 82
#
# x0^83 x1 + x1^84 + x2^7 + x3^3 + x4^2 in P^4(1,1,12,28,42). The chain term
# couples the first two variables, so the exponent matrix is no longer diagonal.

# %%
from delsarte import enumerate_aset, from_quasidiagonal, height, mirror_obstruction_flag, validate
from delsarte.catalog import REFERENCE_HODGE
from delsarte.characters import find_alpha0
from delsarte.height import reduced_character, spectrum

x = from_quasidiagonal((1, 1, 12, 28, 42), (83, 84, 7, 3, 2))
print(x.matrix.tolist())
print("d =", x.d, " valid at p = 5:", validate(x, 5).ok)

# %%
cs = enumerate_aset(x)
print(cs.summary())
a0 = find_alpha0(x)
rc = reduced_character(x)
print("alpha_0 =", a0.entries)
print("e =", rc.e, " d_A =", rc.d_A, " alpha_A =", rc.alpha_A)

# %% [markdown]
# The spectrum modulo 3486 (984 classes).

# %%
sp = spectrum(rc)
for h, ts in sp.grouped.items():
    print(f"{h!s:>4}  {len(ts):4}  {ts[:3]}")

# %%
for p in (43, 127, 1163):
    print(p, height(x, p).height)

# %% [markdown]
# With h11 = 11 and h12 = 491, a finite height above 12 rules out building a
# mirror partner as a crepant resolution of a symplectic quotient.

# %%
h11, h12 = REFERENCE_HODGE[(x.family, x.weights.weights)]
print(mirror_obstruction_flag(height(x, 43).height, h11, h12))
