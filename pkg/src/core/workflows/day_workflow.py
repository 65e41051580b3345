"""
Shared first half of the analysis commands: resolve the input days, then fan
them out to workers and merge the outcomes in (symbol, day) order.
"""

from typing import List

from loguru import logger

from core.models.levels import TrialRecord
from core.observability import record_day, record_trials
from core.services.market_data.day_source import resolve_days
from core.workflows.base import BaseWorkflow, WorkflowStep
from core.workflows.day_tasks import DayOutcome, DayTask, process_day
from core.workflows.parallel import map_days, pool_size


class DayWorkflow(BaseWorkflow):
    """Workflow whose work is per symbol-day. Subclasses add the report steps."""

    analysis: str = ""

    def define_steps(self):
        self.add_step(
            WorkflowStep(
                name="load_days",
                description="Resolve input files or surrogate specs into days",
                handler=self._load_days,
            )
        )
        self.add_step(
            WorkflowStep(
                name="process_days",
                description=f"Run the {self.analysis} analysis on every day and scale",
                handler=self._process_days,
                depends_on=["load_days"],
            )
        )
        self.define_report_steps()

    def define_report_steps(self):
        """Steps after process_days. Must be implemented by subclasses."""
        raise NotImplementedError

    def _load_days(self) -> bool:
        self.shared_resources["days"] = resolve_days(self.config)
        return True

    def _process_days(self) -> bool:
        days = self.shared_resources["days"]
        tasks = [
            DayTask(source=day, index=i, config=self.config, analysis=self.analysis)
            for i, day in enumerate(days)
        ]
        workers = pool_size(self.config.workers, len(tasks))
        outcomes: List[DayOutcome] = sorted(
            map_days(process_day, tasks, workers), key=lambda o: o.sort_key
        )

        for outcome in outcomes:
            skipped = [s for s in outcome.scales if s.skipped]
            status = "skipped" if len(skipped) == len(outcome.scales) else "analyzed"
            record_day(self.workflow_id, status)
            record_trials(t for s in outcome.scales for t in s.trials)

        logger.info(f"Processed {len(outcomes)} days at scales {self.config.scales}")
        self.shared_resources["outcomes"] = outcomes
        return True

    def outcomes(self) -> List[DayOutcome]:
        return self.shared_resources["outcomes"]

    def trials_at(self, scale: int, shuffled: bool = False) -> List[TrialRecord]:
        """Pooled trials of one scale, merged in (symbol, day) order."""
        pooled = []
        for outcome in self.outcomes():
            at_scale = outcome.at_scale(scale)
            pooled.extend(at_scale.shuffled_trials if shuffled else at_scale.trials)
        return pooled

    def skipped_days(self) -> List[dict]:
        return [
            {"symbol": o.symbol, "day": o.day_id, "scale": s.scale, "reason": s.skipped}
            for o in self.outcomes()
            for s in o.scales
            if s.skipped
        ]
