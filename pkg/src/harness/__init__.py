"""Experiment runner binding the theory to simulated configuration models."""

from src.harness.compare import ComparisonTable, compare_sequences
from src.harness.experiment import ExperimentSpec, Removal, ReplicaRow, RunReport, run, sweep
from src.harness.reporting import write_csv, write_json, write_jsonl, write_outputs
