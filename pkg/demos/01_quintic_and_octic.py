# %% [markdown]
# # Heights for the two smallest Fermat threefolds
#
# The quintic x0^5 + ... + x4^5 and the octic x0^8 + x1^8 + x2^8 + x3^8 + x4^2
# in P^4(1,1,1,1,4). We build them, look at their character sets and then
# ask for the height of the formal group in a few characteristics.

# %%
from delsarte import enumerate_aset, find_alpha0, from_fermat, height, newton_low_slope_count, validate
from delsarte.height import reduced_character, spectrum

quintic = from_fermat((1, 1, 1, 1, 1))
octic = from_fermat((1, 1, 1, 1, 4))
print(quintic.matrix.tolist(), "d =", quintic.d)
print(octic.matrix.tolist(), "d =", octic.d)

# %% [markdown]
# The character set is graded by the norm. One character has norm 0, and the
# middle two counts are the Hodge number h^{1,2} (101 for the quintic).

# %%
for x in (quintic, octic):
    cs = enumerate_aset(x)
    print(x.weights.weights, cs.count, cs.graded_counts)

# %% [markdown]
# The norm-zero character, divided by its content, lives modulo d_A. For
# Fermat type it is just the weight vector modulo m.

# %%
for x in (quintic, octic):
    a0 = find_alpha0(x)
    rc = reduced_character(x)
    print("alpha_0 =", a0.entries, "mod", a0.modulus, "->", rc.alpha_A, "mod", rc.d_A)

# %% [markdown]
# Heights only depend on p mod d_A, so one table covers every prime.

# %%
for x in (quintic, octic):
    sp = spectrum(reduced_character(x))
    print(x.weights.weights, {str(h): ts for h, ts in sp.grouped.items()})

# %% [markdown]
# p = 5 mod 8 gives infinite height for the octic even though -1 is not a
# power of 5 mod 8: the orbit norm jumps to 2 at the first step.

# %%
r = height(octic, 5)
print(r.to_dict())

# %% [markdown]
# The brute-force count of characters with Newton slope below 1 agrees with
# the height (and is 0 when the height is infinite).

# %%
for p in (3, 5, 7, 11, 13, 17, 19, 23):
    for name, x in (("quintic", quintic), ("octic", octic)):
        if not validate(x, p).ok:
            continue
        r = height(x, p)
        print(f"{name:8} p={p:3}  height={r.height}  low-slope count={newton_low_slope_count(x, p)}")

# %% [markdown]
# Bad primes are rejected with the failing condition spelled out.

# %%
print(validate(octic, 2).violations)
