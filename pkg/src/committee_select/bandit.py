"""Upper-confidence-bound selection among local search strategies.

Each strategy (arm) carries a running mean of the relative fitness
improvements it produced and the number of times it was picked. Arms
never tried take priority; afterwards selection is argmax of

    quality + exploration_scale * sqrt(ln(total picks) / arm picks)

with natural log and lowest-index tie breaking, so the whole mechanism
is deterministic.
"""

import math
from dataclasses import dataclass, field


def relative_reward(fitness_before, fitness_after):
    """Relative improvement credited to a local search application."""
    if fitness_before == 0:
        raise ValueError("fitness_before must be nonzero")
    return (fitness_after - fitness_before) / abs(fitness_before)


@dataclass
class BanditState:
    """Quality estimates and pick counts for K arms."""

    arms: int
    exploration_scale: float = 0.01
    quality: list = field(init=False)
    counts: list = field(init=False)

    def __post_init__(self):
        if self.arms < 1:
            raise ValueError("need at least one arm")
        self.quality = [0.0] * self.arms
        self.counts = [0] * self.arms

    @property
    def total_count(self):
        return sum(self.counts)

    def select(self):
        """Arm to apply next; unseen arms first, then UCB argmax."""
        for i, n in enumerate(self.counts):
            if n == 0:
                return i
        total = self.total_count
        best_arm = 0
        best_score = -math.inf
        for i in range(self.arms):
            score = self.quality[i] + self.exploration_scale * math.sqrt(
                math.log(total) / self.counts[i]
            )
            if score > best_score:
                best_arm, best_score = i, score
        return best_arm

    def ucb_scores(self):
        """Current per-arm scores (inf for unseen arms), for audit output."""
        total = self.total_count
        scores = []
        for i in range(self.arms):
            if self.counts[i] == 0:
                scores.append(math.inf)
            else:
                scores.append(
                    self.quality[i]
                    + self.exploration_scale
                    * math.sqrt(math.log(total) / self.counts[i])
                )
        return scores

    def update(self, arm, reward):
        """Credit a reward: bump the count, then fold into the running mean."""
        if not 0 <= arm < self.arms:
            raise IndexError(f"arm {arm} out of range [0, {self.arms})")
        self.counts[arm] += 1
        self.quality[arm] += (reward - self.quality[arm]) / self.counts[arm]
        return self
