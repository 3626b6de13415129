import os
import numpy as np

# largest p^k scanned by the brute-force solver
BRUTE_FORCE_GUARD = 10**8
# largest total Hilbert space dimension of the dense simulator
DENSE_GUARD = 4096
# largest p accepted by the Gram-matrix fidelity computation
GRAM_GUARD = 512
MAX_PRIME = 2**31
# below this modulus root finding scans the whole field by default
EXHAUSTIVE_ROOT_LIMIT = 2**16

SEED_ENV_VARIABLE = "HPFG_SEED"


class ModulusMismatchError(ValueError):
    """Raised when field elements or polynomials of different moduli are combined."""


class GuardExceededError(ValueError):
    """Raised when an enumeration or dense construction exceeds its size guard."""


class ShapeError(ValueError):
    """Raised when tuple lengths or system shapes do not match."""


class ConfigError(ValueError):
    """Raised for invalid run configurations (bad primes, unknown keywords)."""


class CheckFailedError(RuntimeError):
    """Raised when an internal consistency check of a computation fails."""


def check_guard(size, guard, what="enumeration"):
    """Raises if a requested size is above its guard.

    :param size: requested number of items (or dimension)
    :param guard: largest admissible size
    :param what: name of the guarded quantity, used in the error message
    :return: None
    """
    if size > guard:
        raise GuardExceededError(
            "%s of size %s exceeds the guard of %s" % (what, size, guard)
        )


def parse_int_list(text):
    """Parses a comma separated list of integers, e.g. "1,2,3".

    :param text: string, list or tuple
    :return: tuple of int
    """
    if text is None:
        return None
    if isinstance(text, (list, tuple)):
        return tuple(int(item) for item in text)
    if isinstance(text, (int, np.integer)):
        return (int(text),)
    items = [item.strip() for item in str(text).split(",") if item.strip() != ""]
    try:
        return tuple(int(item) for item in items)
    except ValueError:
        raise ConfigError("Could not parse integer list from '%s'" % text)


def resolve_seed(seed=None, default=0):
    """Resolves the seed of a run: explicit value, then the HPFG_SEED environment
    variable, then the default.

    :param seed: explicit seed or None
    :param default: fallback seed
    :return: seed as int
    """
    if seed is not None:
        return int(seed)
    env_seed = os.environ.get(SEED_ENV_VARIABLE)
    if env_seed is not None and env_seed.strip() != "":
        try:
            return int(env_seed)
        except ValueError:
            raise ConfigError(
                "%s must be an integer, got '%s'" % (SEED_ENV_VARIABLE, env_seed)
            )
    return int(default)


def make_rng(seed):
    """Seeded random stream used for every random choice of a run.

    :param seed: int seed, or an existing numpy Generator which is returned as is
    :return: numpy.random.Generator
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def tuple_to_index(values, p):
    """Lexicographic rank of a tuple over F_p (leftmost component most significant).

    :param values: tuple of canonical residues
    :param p: modulus as int
    :return: rank in [0, p^len(values) - 1]
    """
    index = 0
    for value in values:
        index = index * p + int(value)
    return index


def index_to_tuple(index, p, length):
    """Inverse of tuple_to_index.

    :param index: rank
    :param p: modulus as int
    :param length: tuple length
    :return: tuple of int
    """
    values = [0] * length
    for position in range(length - 1, -1, -1):
        index, values[position] = divmod(index, p)
    return tuple(values)


def all_tuples(p, length):
    """All tuples of F_p^length in lexicographic order.

    :param p: modulus as int
    :param length: tuple length
    :return: int64 array of shape (p**length, length)
    """
    if length == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grid = np.indices((p,) * length, dtype=np.int64)
    return grid.reshape(length, -1).T
