#!/usr/bin/env python3
"""Probe the star-like geometry of two-mode state space.

Three experiments on the N-particle two-mode system:
  1. border probe: arbitrarily small admixtures of a phase state into the
     identity-proportional state are already entangled;
  2. werner scan: the entangled fraction of the family has no threshold in p;
  3. bipartition sweep: only the identity-proportional state stays separable
     under every sampled mode re-mixing.
"""

import argparse

import numpy as np

from bosent import (
    Bipartition,
    DensityMatrix,
    bipartition_sweep,
    border_probe,
    enumerate_basis,
    phase_state,
    to_density,
    totally_mixed,
    werner_scan,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=2)
    parser.add_argument("--samples", type=int, default=200)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    basis = enumerate_basis(Bipartition(N=args.n, M=2, m=1))
    mixed = totally_mixed(basis)
    perturbation = to_density(phase_state(basis))

    print("# border probe at the identity-proportional state")
    print("eps,nb_linf,verdict")
    for pt in border_probe(mixed, perturbation, [10.0 ** (-k) for k in range(1, 9)]):
        print(f"{pt.eps:.1e},{pt.nonblock_linf:.3e},{pt.verdict}")

    print("\n# werner scan")
    print("p,negativity,verdict")
    for pt in werner_scan(basis, [0.0, 1e-6, 1e-3, 0.01, 0.1, 0.5, 1.0]):
        print(f"{pt.p:.1e},{pt.negativity:.6e},{pt.verdict}")

    print("\n# bipartition sweep")
    print("state,fraction_separable")
    result = bipartition_sweep(mixed, samples=args.samples, seed=args.seed)
    print(f"totally-mixed,{result.fraction_separable}")
    rng = np.random.default_rng(args.seed)
    probs = np.sort(rng.dirichlet(np.ones(basis.dim)))[::-1]
    biased = DensityMatrix(basis=basis, mat=np.diag(probs).astype(complex))
    result = bipartition_sweep(biased, samples=args.samples, seed=args.seed)
    print(f"biased-diagonal,{result.fraction_separable}")


if __name__ == "__main__":
    main()
