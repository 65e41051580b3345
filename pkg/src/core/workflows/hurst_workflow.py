"""
hurst: DFA Hurst exponent of every day at every scale, its yearly mean and
the distribution over days.
"""

import math
from typing import Any, Dict, List

import numpy as np
from loguru import logger

from core.config.run_config import RunConfig
from core.models.features import Binning
from core.services.features.histogram import build_histogram
from core.workflows.base import WorkflowStep
from core.workflows.day_tasks import HURST
from core.workflows.day_workflow import DayWorkflow
from core.workflows.reporting import report_config

HURST_CSV_COLUMNS = ["symbol", "day", "scale", "hurst", "fit_stderr"]


class HurstWorkflow(DayWorkflow):
    """Per-day Hurst table, mean, standard error and histogram per scale."""

    workflow_id = "hurst"
    analysis = HURST

    def __init__(self, config: RunConfig):
        super().__init__(
            config,
            "Hurst exponents",
            "Estimate the Hurst exponent of every day by DFA",
        )

    def define_report_steps(self):
        self.add_step(
            WorkflowStep(
                name="summarize",
                description="Mean, standard error and histogram of H per scale",
                handler=self._summarize,
                depends_on=["process_days"],
            )
        )
        self.add_step(
            WorkflowStep(
                name="write_reports",
                description="Write hurst.csv and hurst.json",
                handler=self._write_reports,
                depends_on=["summarize"],
            )
        )

    def _rows(self, scale: int) -> List[Dict[str, Any]]:
        rows = []
        for outcome in self.outcomes():
            estimate = outcome.at_scale(scale).hurst
            if estimate is None:
                continue
            rows.append(
                {
                    "symbol": outcome.symbol,
                    "day": outcome.day_id,
                    "scale": scale,
                    "hurst": estimate.hurst,
                    "fit_stderr": estimate.fit_stderr,
                }
            )
        return rows

    def _summarize(self) -> bool:
        summaries = []
        for scale in self.config.scales:
            rows = self._rows(scale)
            summary: Dict[str, Any] = {"scale": scale, "days": len(rows)}
            if not rows:
                logger.warning(f"No Hurst estimate at scale {scale}")
                summaries.append(summary)
                continue

            values = np.array([r["hurst"] for r in rows])
            stderr = (
                float(np.std(values, ddof=1) / math.sqrt(len(values)))
                if len(values) > 1
                else None
            )
            first = next(
                o.at_scale(scale).hurst
                for o in self.outcomes()
                if o.at_scale(scale).hurst is not None
            )
            summary.update(
                {
                    "mean_hurst": float(values.mean()),
                    "stderr": stderr,
                    "fraction_below_half": float(np.mean(values < 0.5)),
                    "histogram": build_histogram(
                        values, Binning.LINEAR, self.config.n_bins
                    ).to_dict(),
                    "fluctuation_points": {
                        "ln_n": np.log(first.window_sizes),
                        "ln_sigma": np.log(first.fluctuations),
                        "slope": first.fit_slope,
                        "intercept": first.fit_intercept,
                    },
                }
            )
            logger.info(
                f"scale={scale}: mean H={summary['mean_hurst']:.4f} over {len(rows)} days"
            )
            summaries.append(summary)

        self.shared_resources["summaries"] = summaries
        return True

    def _write_reports(self) -> bool:
        self.files.ensure_directory()
        rows = [row for scale in self.config.scales for row in self._rows(scale)]
        self.files.save_csv(rows, HURST_CSV_COLUMNS, "hurst.csv")
        self.files.save_json(
            {
                "command": self.workflow_id,
                "config": report_config(self.config),
                "days": len(self.outcomes()),
                "skipped": self.skipped_days(),
                "scales": self.shared_resources["summaries"],
            },
            "hurst.json",
        )
        return True
