"""
Checking the axioms
===================

``check_axioms`` draws random triples and counts law violations.  It is the
engine behind ``solve check`` and works for any object implementing the
semiring interface, including interval extensions and products.
"""
from idempotent import INSTANCES, extension
from idempotent.laws import check_axioms

for key, S in INSTANCES.items():
    laws = check_axioms(S, cases=500)
    print(f"{key:>13}: {sum(laws.values())} failures over {len(laws)} laws")

# %%
# The strong interval extension of max-plus keeps cancellation; the weak one
# does not declare it.
print(extension(INSTANCES["max-plus"], True).has("cancellative"),
      extension(INSTANCES["max-plus"]).has("cancellative"))
