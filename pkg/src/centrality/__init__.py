"""Strictly local centralities, threshold killing and local-limit checks."""

from src.centrality.ball_hash import BallHash, ball_digest_distribution, ball_hash, total_variation
from src.centrality.consistency import ConsistencyReport, killed_ball_consistency_check
from src.centrality.local_limit import LocalLimitEstimate, local_limit_estimates
from src.centrality.scores import (
    CentralityScores,
    degree_centrality,
    degree_rank_centrality,
    finite_radius_pagerank,
    kill_by_threshold,
    threshold_kill_sequence,
)
