from hpfg.GraphSystems.SolverTypes.solver_base import SolverBase


class QuadraticSolver(SolverBase):
    """Closed-form solution of

        x b + y c = v,   x b^2 + y c^2 = w

    by case analysis on (x, y)."""

    shape = (2, 2)

    def solve(self, instance):
        """

        :param instance: SystemInstance with n = k = 2
        :return: SolutionSet; its branch names the case that produced it
        """
        self._check_instance(instance)
        p = self.p
        inv = self._modulus.inv
        x, y = instance.x
        v, w = instance.w

        if x == 0 and y == 0:
            if v == 0 and w == 0:
                candidates = [(b, c) for b in range(p) for c in range(p)]
            else:
                candidates = []
            return self._verified(instance, candidates, "zero_x")

        if y == 0 or x == 0:
            if y == 0:
                b = v * inv(x) % p
                candidates = [(b, c) for c in range(p)] if b * b * x % p == w else []
            else:
                c = v * inv(y) % p
                candidates = [(b, c) for b in range(p)] if c * c * y % p == w else []
            return self._verified(instance, candidates, "one_zero")

        if (x + y) % p == 0:
            # x (b - c) = v and v (b + c) = w
            if v == 0:
                candidates = [(b, b) for b in range(p)] if w == 0 else []
            else:
                difference = v * inv(x) % p
                total = w * inv(v) % p
                half = inv(2)
                candidates = [
                    ((total + difference) * half % p, (total - difference) * half % p)
                ]
            return self._verified(instance, candidates, "opposite")

        discriminant = x * inv(y) * (w * (x + y) - v * v) % p
        inv_sum = inv(x + y)
        inv_x = inv(x)
        candidates = []
        for root in self._modulus.sqrt(discriminant):
            c = (v + root) * inv_sum % p
            candidates.append(((v - y * c) * inv_x % p, c))
        return self._verified(instance, candidates, "generic")
