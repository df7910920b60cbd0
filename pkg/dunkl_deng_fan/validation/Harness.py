from typing import Any, Dict, List

import logging
from langgraph.graph import END, StateGraph

from dunkl_deng_fan.validation.HarnessComponents import (
    HarnessConfig,
    HarnessEdges,
    HarnessNodes,
    HarnessState,
)

logging.basicConfig(
    format="%(name)s: %(asctime)s | %(levelname)s | %(filename)s:%(lineno)s | %(process)d >>> %(message)s",
    datefmt="%Y-%m-%dT%H:%M:%SZ",
)
logger = logging.getLogger("Harness")
logger.setLevel(logging.INFO)

# state keys too bulky to echo at every stage
BULKY_KEYS = ("discrepancy_rows", "pekeris_rows", "convergence_rows")


class ValidationHarness:
    """
    Runs the acceptance suite as a state graph.

    The stages run in a fixed order (alpha chain, limits, spectra, oracle,
    wavefunctions, comparison ledger) before a judge routes the run to
    acceptance or rejection.

    Attributes:
        nodes (HarnessNodes): Nodes of the graph.
        edges (HarnessEdges): Routing of the judged state.
        graph (StateGraph): The uncompiled graph.
    """

    def __init__(self, config: HarnessConfig) -> None:
        """
        Args:
            config (HarnessConfig): Parameters and numerical settings of the run.
        """
        self.config = config
        self.nodes = HarnessNodes(config)
        self.edges = HarnessEdges()
        logger.info("Setting up validation graph")
        self.graph = self._setup()

    def _setup(self) -> StateGraph:
        graph = StateGraph(HarnessState)

        ## Nodes
        graph.add_node("alpha_checks", self.nodes.alpha_node)
        graph.add_node("limit_checks", self.nodes.limit_node)
        graph.add_node("spectra", self.nodes.spectra_node)
        graph.add_node("oracle", self.nodes.oracle_node)
        graph.add_node("wavefunctions", self.nodes.wavefunction_node)
        graph.add_node("compare", self.nodes.compare_node)
        graph.add_node("judge", self.nodes.judge_node)
        graph.add_node("accept", self.nodes.accept_node)
        graph.add_node("reject", self.nodes.reject_node)

        ## Edges
        graph.set_entry_point("alpha_checks")
        graph.add_edge("alpha_checks", "limit_checks")
        graph.add_edge("limit_checks", "spectra")
        graph.add_edge("spectra", "oracle")
        graph.add_edge("oracle", "wavefunctions")
        graph.add_edge("wavefunctions", "compare")
        graph.add_edge("compare", "judge")

        ## Conditional edges
        graph.add_conditional_edges(
            "judge",
            self.edges.should_continue,
            {"accepted": "accept", "rejected": "reject"},
        )
        graph.add_edge("accept", END)
        graph.add_edge("reject", END)

        return graph

    def display_components(self, stage: Dict[str, Any], verbose: bool = False) -> None:
        logger.info("#" * 20)
        for node, update in stage.items():
            logger.info(f"Node : {node}")
            for key, value in (update or {}).items():
                if key in BULKY_KEYS:
                    logger.info(f"Task : {key} ({len(value)} rows)")
                    continue
                logger.info(f"Task : {key}")
                if verbose:
                    logger.info(value)
        logger.info("#" * 20)

    def run(self) -> Dict[str, Any]:
        """
        Execute every stage and return the final state.

        Returns:
            Dict[str, Any]: Criterion outcomes, report tables and finalized_state.
        """
        graph = self.graph.compile()
        final: Dict[str, Any] = {}
        stages: List[Dict[str, Any]] = []
        for i, update in enumerate(
            graph.stream({"criteria": [], "oracle_orders": []}, stream_mode="updates")
        ):
            self.display_components(update)
            for values in update.values():
                final.update(values or {})
            stages.append(update)
            logger.info(f"Harness at stage {i + 1}")
        final["stages"] = [list(stage.keys())[0] for stage in stages]
        return final
