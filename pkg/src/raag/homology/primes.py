from raag.errors import PreconditionError


def is_prime(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def require_prime(p):
    if not is_prime(p):
        raise PreconditionError(f"{p} is not a prime.")
    return p


def prime_factors(n):
    """
    The distinct primes dividing n, ascending. Trial division is plenty
    for torsion coefficients of complexes this size.
    """
    n = abs(int(n))
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append(n)
    return factors
