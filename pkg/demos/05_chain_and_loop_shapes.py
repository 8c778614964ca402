# %% [markdown]
# # Beyond one chain: other Delsarte shapes
#
# Any 5x5 exponent matrix meeting the Delsarte conditions goes through the
# same pipeline. Here each chain or loop shape gets a small Calabi-Yau example,
# and the fast height algorithm is compared with the brute-force slope count.

# %%
from delsarte import newton_low_slope_count, validate
from delsarte.arith import is_prime
from delsarte.core import SHAPES, links_from_exponents
from delsarte.height import height, reduced_character, spectrum

examples = {
    "x0^m0*x1": (5, 8, 3, 5, 6),
    "x0^m0*x2": (5, 3, 8, 5, 6),
    "x3*x4^m4": (3, 5, 6, 8, 5),
    "loop(0,1)": (4, 7, 4, 4, 6),
    "loop(0,1,2)": (2, 4, 6, 7, 7),
}

# %%
for name, exps in examples.items():
    x = links_from_exponents(exps, SHAPES[name])
    rc = reduced_character(x)
    print(f"{name:12} Q={x.weights.weights} m={x.degree} d={x.d} d_A={rc.d_A}")
    print("   ", x.matrix.tolist())
    print("    finite heights:", sorted(spectrum(rc).finite_heights))

# %%
for name, exps in examples.items():
    x = links_from_exponents(exps, SHAPES[name])
    rows = []
    for p in [p for p in range(3, 80) if is_prime(p) and validate(x, p).ok][:6]:
        rows.append((p, height(x, p).height, newton_low_slope_count(x, p)))
    print(name, rows)

# %% [markdown]
# A general matrix is accepted too, with a reminder that quasi-smoothness is
# the caller's responsibility.

# %%
from delsarte.core import DelsarteThreefold, GENERAL

x = links_from_exponents(examples["loop(0,1)"], SHAPES["loop(0,1)"])
general = DelsarteThreefold(x.weights, x.matrix, GENERAL)
print(validate(general).notes)
print(general.to_json())
