from itertools import combinations

import numpy as np

from gekr.models import GEKR


def naive_deficient(bits: np.ndarray, patterns=GEKR) -> list[tuple[int, int, int]]:
    """Эталон без битовых трюков: множество столбцов каждой тройки."""
    rows = [tuple(int(b) for b in row) for row in bits]
    found = []
    for i, j, l in combinations(range(len(rows)), 3):
        columns = set(zip(rows[i], rows[j], rows[l]))
        if any(p not in columns for p in patterns.members):
            found.append((i, j, l))
    return found
