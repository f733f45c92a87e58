"""
Prime tables, Chebyshev's theta and Mertens' product
====================================================

The resonator bound rests on two classical sums over primes. This script
builds one table and sweeps the functionals across several decades.
"""

# a single sieve serves every query below it
import math

from resonance import chebyshev_theta, mertens_product, prime_pi, sieve, sup_log_bound
from resonance.primes import EULER_GAMMA

table = sieve(10**6)
print(f"{len(table.primes)} primes up to {table.limit}")

###############################################################################
# Mertens: the product over 1/(1 - 1/p) tracks e^gamma log x with an O(1) gap
eg = math.exp(EULER_GAMMA)
for x in (1e2, 1e3, 1e4, 1e5, 1e6):
    m = mertens_product(table, x)
    print(f"x={x:8.0e}  pi={prime_pi(table, x):6d}  theta/x={chebyshev_theta(table, x) / x:.4f}"
          f"  mertens={m:.5f}  gap={m - eg * math.log(x):+.5f}")

###############################################################################
# pi(x) log x - theta(x) is the logarithm of the largest possible |R|; it grows like x/log x
for x in (1e3, 1e4, 1e5, 1e6):
    print(f"x={x:8.0e}  sup_log_bound/(x/log x) = {sup_log_bound(table, x) / (x / math.log(x)):.4f}")
