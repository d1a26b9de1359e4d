"""Instance generators: the essential-trajectory construction and random sets."""

from tmtb.constructions.monster import (
    MonsterConfig,
    MonsterReport,
    lp_monster,
    monster_removals,
    monster_without,
)
from tmtb.constructions.random_sets import random_segment_set, random_trajectory_set

__all__ = [
    "MonsterConfig",
    "MonsterReport",
    "lp_monster",
    "monster_removals",
    "monster_without",
    "random_segment_set",
    "random_trajectory_set",
]
