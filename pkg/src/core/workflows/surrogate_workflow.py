"""
surrogate: materialize seeded surrogate days as tick CSV files.
"""

from loguru import logger

from core.config.run_config import RunConfig
from core.exceptions.system_exceptions import ConfigurationError, OutputNotWritableError
from core.services.market_data.day_source import resolve_days
from core.services.market_data.tick_loader import write_ticks
from core.workflows.base import BaseWorkflow, WorkflowStep


class SurrogateWorkflow(BaseWorkflow):
    workflow_id = "surrogate"

    def __init__(self, config: RunConfig):
        super().__init__(
            config,
            "Surrogate days",
            "Generate seeded surrogate days in the tick CSV format",
        )

    def define_steps(self):
        self.add_step(
            WorkflowStep(
                name="generate_days",
                description="Build one surrogate spec per day and generate it",
                handler=self._generate_days,
            )
        )
        self.add_step(
            WorkflowStep(
                name="write_files",
                description="Write SYMBOL_DAY.csv tick files",
                handler=self._write_files,
                depends_on=["generate_days"],
            )
        )

    def _generate_days(self) -> bool:
        if not self.config.uses_surrogates:
            raise ConfigurationError("surrogate needs surrogate_kind")
        sources = resolve_days(self.config)
        # Every day is generated before the first file is written. Days without a
        # fixed interval are matched to the first configured scale.
        scale = self.config.scales[0]
        self.shared_resources["ticks"] = [
            source.load(scale, self.config.mode) for source in sources
        ]
        return True

    def _write_files(self) -> bool:
        directory = self.files.ensure_directory()
        for ticks in self.shared_resources["ticks"]:
            path = self.files.track(directory / f"{ticks.identity}.csv")
            try:
                write_ticks(ticks, path)
            except OSError as e:
                raise OutputNotWritableError(str(path), e)
        logger.info(
            f"Wrote {len(self.shared_resources['ticks'])} surrogate days to {directory}"
        )
        return True
