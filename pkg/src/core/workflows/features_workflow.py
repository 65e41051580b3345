"""
features: recurrence times and maximum excursions between consecutive trials,
their histograms and power-law fits, compared with the shuffled baseline.
"""

from typing import Any, Dict, List, Optional, Tuple

from loguru import logger

from core.config.run_config import RunConfig
from core.exceptions.analysis_exceptions import TooFewBinsError
from core.models.features import FEATURE_CSV_COLUMNS, BounceFeature
from core.services.features.histogram import build_histogram, tail_comparison
from core.services.inference.power_law import powerlaw_fit
from core.workflows.base import WorkflowStep
from core.workflows.day_tasks import FEATURES
from core.workflows.day_workflow import DayWorkflow
from core.workflows.reporting import report_config

RECURRENCE_TIME = "recurrence_time"
MAX_EXCURSION = "max_excursion"


class FeaturesWorkflow(DayWorkflow):
    workflow_id = "features"
    analysis = FEATURES

    def __init__(self, config: RunConfig):
        super().__init__(
            config,
            "Bounce features",
            "Histogram recurrence times and max excursions, fit power laws",
        )

    def define_report_steps(self):
        self.add_step(
            WorkflowStep(
                name="fit_distributions",
                description="Histograms, power-law fits and tail comparison per scale",
                handler=self._fit_distributions,
                depends_on=["process_days"],
            )
        )
        self.add_step(
            WorkflowStep(
                name="write_reports",
                description="Write features.csv and histograms.json",
                handler=self._write_reports,
                depends_on=["fit_distributions"],
            )
        )

    def features_at(self, scale: int, shuffled: bool = False) -> List[BounceFeature]:
        pooled = []
        for outcome in self.outcomes():
            at_scale = outcome.at_scale(scale)
            pooled.extend(at_scale.shuffled_features if shuffled else at_scale.features)
        return pooled

    def _distribution(
        self, samples: List[float], fit_range: Optional[Tuple[float, float]]
    ) -> Optional[Dict[str, Any]]:
        if not samples:
            return None
        histogram = build_histogram(samples, self.config.binning, self.config.n_bins)
        payload: Dict[str, Any] = {"samples": len(samples), **histogram.to_dict()}
        try:
            payload["fit"] = powerlaw_fit(histogram, fit_range).to_dict()
        except TooFewBinsError as e:
            payload["fit"] = None
            payload["fit_error"] = e.message
            logger.warning(f"Power-law fit skipped: {e.message}")
        return payload

    def _fit_distributions(self) -> bool:
        summaries = []
        for scale in self.config.scales:
            data = self.features_at(scale)
            shuffled = self.features_at(scale, shuffled=True)
            if not data:
                logger.warning(f"No bounce features at scale {scale}")

            summary: Dict[str, Any] = {"scale": scale, "features": len(data)}
            for name in (RECURRENCE_TIME, MAX_EXCURSION):
                # fit_min/fit_max bound the recurrence-time fit only
                fit_range = self.config.fit_range if name == RECURRENCE_TIME else None
                values = [getattr(f, name) for f in data]
                baseline = [getattr(f, name) for f in shuffled]
                entry: Dict[str, Any] = {"data": self._distribution(values, fit_range)}
                if self.config.shuffled_baseline:
                    entry["shuffled"] = self._distribution(baseline, fit_range)
                    entry["tail_comparison"] = (
                        tail_comparison(values, baseline) if values and baseline else None
                    )
                summary[name] = entry
            summaries.append(summary)

        self.shared_resources["summaries"] = summaries
        return True

    def _write_reports(self) -> bool:
        self.files.ensure_directory()
        rows = [f.to_row() for s in self.config.scales for f in self.features_at(s)]
        self.files.save_csv(rows, FEATURE_CSV_COLUMNS, "features.csv")
        if self.config.shuffled_baseline:
            shuffled_rows = [
                f.to_row()
                for s in self.config.scales
                for f in self.features_at(s, shuffled=True)
            ]
            self.files.save_csv(
                shuffled_rows, FEATURE_CSV_COLUMNS, "features_shuffled.csv"
            )
        if not rows:
            logger.warning("No bounce features found; features.csv is empty")

        self.files.save_json(
            {
                "command": self.workflow_id,
                "config": report_config(self.config),
                "days": len(self.outcomes()),
                "skipped": self.skipped_days(),
                "scales": self.shared_resources["summaries"],
            },
            "histograms.json",
        )
        return True
