"""
analyze: conditional bounce probabilities and the independence test per scale
and level kind, for the data and its shuffled counterpart.
"""

from typing import Any, Dict, List

from loguru import logger

from core.config.run_config import RunConfig
from core.models.levels import TRIAL_CSV_COLUMNS, LevelKind
from core.services.inference.aggregation import count_trials
from core.services.inference.chi_square import chi2_independence
from core.workflows.base import WorkflowStep
from core.workflows.day_tasks import TRIALS
from core.workflows.day_workflow import DayWorkflow
from core.workflows.reporting import plot_name, report_config

PLOT_COLUMNS = ["x", "y", "yerr", "series"]
DATA = "data"
SHUFFLED = "shuffled"


class AnalyzeWorkflow(DayWorkflow):
    """Bounce statistics, chi-square test, trial table and plot points."""

    workflow_id = "analyze"
    analysis = TRIALS

    def __init__(self, config: RunConfig):
        super().__init__(
            config,
            "Analyze bounces",
            "Classify stripe trials and test independence of p(b|b_prev)",
        )

    def define_report_steps(self):
        self.add_step(
            WorkflowStep(
                name="aggregate_statistics",
                description="Pool trials into BounceStats and run the chi-square test",
                handler=self._aggregate_statistics,
                depends_on=["process_days"],
            )
        )
        self.add_step(
            WorkflowStep(
                name="write_reports",
                description="Write report.json, trial tables and plot CSVs",
                handler=self._write_reports,
                depends_on=["aggregate_statistics"],
            )
        )

    def _series_labels(self) -> List[str]:
        return [DATA, SHUFFLED] if self.config.shuffled_baseline else [DATA]

    def _aggregate_statistics(self) -> bool:
        config = self.config
        entries: List[Dict[str, Any]] = []
        for scale in config.scales:
            for kind in (LevelKind.SUPPORT, LevelKind.RESISTANCE):
                for label in self._series_labels():
                    trials = self.trials_at(scale, shuffled=label == SHUFFLED)
                    counts = count_trials(trials, kind, config.max_b)
                    stats = counts.to_stats()
                    chi2 = None
                    if len(stats) >= 2:
                        chi2 = chi2_independence(
                            stats, config.alpha, config.dof, config.c_hat_method
                        )
                        logger.info(
                            f"scale={scale} {kind.value} {label}: "
                            f"chi2={chi2.statistic:.4g} p={chi2.p_value:.4g} "
                            f"{chi2.decision.value}"
                        )
                    else:
                        logger.warning(
                            "Independence test skipped: max_b=1 leaves one class"
                        )
                    entries.append(
                        {
                            "scale": scale,
                            "kind": kind.value,
                            "series": label,
                            "stats": stats,
                            "chi2": chi2,
                            "diagnostics": counts.diagnostics(),
                        }
                    )
        self.shared_resources["entries"] = entries
        return True

    def _write_reports(self) -> bool:
        entries = self.shared_resources["entries"]
        self.files.ensure_directory()

        report = {
            "command": self.workflow_id,
            "config": report_config(self.config),
            "days": len(self.outcomes()),
            "skipped": self.skipped_days(),
            "results": [
                {
                    **entry,
                    "stats": [s.to_dict() for s in entry["stats"]],
                    "chi2": entry["chi2"].to_dict() if entry["chi2"] else None,
                }
                for entry in entries
            ],
        }
        self.files.save_json(report, "report.json")

        all_trials = [t for scale in self.config.scales for t in self.trials_at(scale)]
        self.files.save_csv(
            (t.to_row() for t in all_trials), TRIAL_CSV_COLUMNS, "trials.csv"
        )
        if self.config.shuffled_baseline:
            shuffled = [
                t
                for scale in self.config.scales
                for t in self.trials_at(scale, shuffled=True)
            ]
            self.files.save_csv(
                (t.to_row() for t in shuffled), TRIAL_CSV_COLUMNS, "trials_shuffled.csv"
            )

        for scale in self.config.scales:
            for kind in (LevelKind.SUPPORT, LevelKind.RESISTANCE):
                rows = [
                    {"x": s.b_prev, "y": s.mean, "yerr": s.std, "series": e["series"]}
                    for e in entries
                    if e["scale"] == scale and e["kind"] == kind.value
                    for s in e["stats"]
                ]
                self.files.save_csv(rows, PLOT_COLUMNS, plot_name(kind.value, scale))

        logger.info(f"Wrote {len(self.files.created)} files to {self.config.output_dir}")
        return True
