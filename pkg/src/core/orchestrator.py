"""
Workflow orchestrator: runs a command's steps in dependency order and records
the outcome.
"""

import traceback
import uuid
from datetime import datetime
from typing import Any, Dict, List, Optional

from loguru import logger

from core.config.run_config import RunConfig
from core.exceptions.base_exceptions import BounceLabException
from core.exceptions.workflow_exceptions import StepExecutionFailedError
from core.logging import get_run_id, set_run_id
from core.observability import (
    end_workflow_timer,
    record_workflow_step,
    start_workflow_timer,
)
from core.workflows.base import BaseWorkflow, StepStatus, WorkflowResult, WorkflowStatus
from core.workflows.registry import workflow_registry


class WorkflowOrchestrator:
    """Executes registered workflows and keeps their results."""

    def __init__(self):
        self.workflows: Dict[str, BaseWorkflow] = {}
        self.execution_history: List[WorkflowResult] = []

    def register_workflow(self, workflow: BaseWorkflow):
        self.workflows[workflow.workflow_id] = workflow
        logger.debug(f"Workflow registered: {workflow.workflow_id} - {workflow.name}")

    def unregister_workflow(self, workflow_id: str):
        if self.workflows.pop(workflow_id, None) is not None:
            logger.debug(f"Workflow unregistered: {workflow_id}")

    def run(
        self, command: str, config: RunConfig, run_id: Optional[str] = None
    ) -> WorkflowResult:
        """Create, execute and unregister the workflow of one command."""
        workflow = workflow_registry.create_workflow(command, config)
        self.register_workflow(workflow)
        try:
            return self.execute_workflow(workflow.workflow_id, run_id=run_id)
        finally:
            self.unregister_workflow(workflow.workflow_id)

    def execute_workflow(
        self, workflow_id: str, run_id: Optional[str] = None
    ) -> WorkflowResult:
        """
        Run every step of a registered workflow. The first failing step stops
        the run, its dependents stay unrun and the files written so far are
        removed.

        Raises:
            ValueError: no workflow registered under `workflow_id`
        """
        if workflow_id not in self.workflows:
            raise ValueError(f"Workflow not found: {workflow_id}")
        workflow = self.workflows[workflow_id]

        workflow.reset()
        workflow.status = WorkflowStatus.RUNNING
        run_id = run_id or uuid.uuid4().hex[:12]
        previous_run_id = get_run_id()
        set_run_id(run_id)

        result = WorkflowResult(
            workflow_id=workflow_id,
            status=WorkflowStatus.RUNNING,
            steps_completed=0,
            steps_failed=0,
            total_steps=len(workflow.steps),
            started_at=datetime.now(),
        )
        logger.info(f"Starting workflow: {workflow.name}")
        start_workflow_timer(run_id)

        try:
            for step_name in workflow.get_step_execution_order():
                step = workflow.steps[step_name]
                if self._has_failed_dependency(workflow, step_name):
                    step.status = StepStatus.SKIPPED
                    record_workflow_step(workflow_id, step_name, "skipped")
                    continue

                self._execute_step(workflow, step_name, result)
                if step.status == StepStatus.FAILED:
                    result.status = WorkflowStatus.FAILED
                    result.exception = step.original_exception
                    result.errors[step_name] = step.error
                    logger.error(f"Step failed, stopping workflow: {step_name}")
                    break
            else:
                result.status = WorkflowStatus.COMPLETED

        except Exception as e:
            logger.error(f"Workflow execution error: {e}")
            logger.debug(traceback.format_exc())
            result.status = WorkflowStatus.FAILED
            result.errors["orchestrator"] = str(e)
            result.exception = e

        finally:
            workflow.status = result.status
            failed = result.status != WorkflowStatus.COMPLETED
            if not failed:
                result.results["files"] = workflow.output_files()
            workflow.cleanup(failed=failed)
            end_workflow_timer(run_id, workflow_id)
            result.completed_at = datetime.now()
            result.duration = (result.completed_at - result.started_at).total_seconds()
            set_run_id(previous_run_id)

        logger.info(
            f"Workflow completed: {workflow.name} - Status: {result.status.value} "
            f"({result.duration:.2f}s)"
        )
        self.execution_history.append(result)
        return result

    @staticmethod
    def _has_failed_dependency(workflow: BaseWorkflow, step_name: str) -> bool:
        return any(
            workflow.steps[dep].status in (StepStatus.FAILED, StepStatus.SKIPPED)
            for dep in workflow.steps[step_name].depends_on
            if dep in workflow.steps
        )

    def _execute_step(
        self, workflow: BaseWorkflow, step_name: str, result: WorkflowResult
    ):
        """Run one step. Unexpected errors are wrapped in StepExecutionFailedError."""
        step = workflow.steps[step_name]
        step.status = StepStatus.RUNNING
        step.started_at = datetime.now()
        logger.debug(f"Executing step: {step_name} - {step.description}")

        try:
            if not step.handler():
                raise StepExecutionFailedError(
                    step_name, RuntimeError("step handler returned False")
                )
            step.status = StepStatus.COMPLETED
            step.result = True
            result.steps_completed += 1
            record_workflow_step(workflow.workflow_id, step_name, "success")
            logger.debug(f"Step completed: {step_name}")
        except Exception as e:
            if not isinstance(e, BounceLabException):
                logger.debug(traceback.format_exc())
                e = StepExecutionFailedError(step_name, e)
            step.status = StepStatus.FAILED
            step.error = str(e)
            step.original_exception = e
            result.steps_failed += 1
            record_workflow_step(workflow.workflow_id, step_name, "failed")
            logger.error(f"Step failed with error: {step_name} - {e}")
        finally:
            step.completed_at = datetime.now()

    def get_workflow_status(self, workflow_id: str) -> Dict[str, Any]:
        """Status of a registered workflow and each of its steps."""
        if workflow_id not in self.workflows:
            return {"error": "Workflow not found"}

        workflow = self.workflows[workflow_id]
        return {
            "workflow_id": workflow_id,
            "name": workflow.name,
            "status": workflow.status.value,
            "steps": {
                name: {
                    "status": step.status.value,
                    "error": step.error,
                    "depends_on": step.depends_on,
                }
                for name, step in workflow.steps.items()
            },
        }


def create_orchestrator() -> WorkflowOrchestrator:
    return WorkflowOrchestrator()
