from typing import List

from tabulate import tabulate

from clone_entanglement.cloner_core import CloneSpec, SchmidtOutputState, alpha_sq, binomial, optimal_fidelity, output_state
from clone_entanglement.common import format_decimal, format_rational
from clone_entanglement.entanglement_measures import (
    concurrence_x_form, eof_from_concurrence, ppt_three_clone,
)
from clone_entanglement.reduced_states import (
    clone_ancilla_state, single_clone_fidelity, three_clone_state, two_clone_state,
)


def cloner_summary(spec: CloneSpec) -> List[dict]:
    """One row per quantity: fidelity, then concurrence and EoF of every pair
    reduction, then the three-clone PPT verdict where M allows it."""
    data = [{
        "Quantity": "single-clone fidelity",
        "Exact": format_rational(single_clone_fidelity(spec)),
        "Value": format_decimal(float(single_clone_fidelity(spec))),
    }]
    if spec.m_outputs >= 2:
        for label, state in (("two clones", two_clone_state(spec)), ("clone + ancilla", clone_ancilla_state(spec))):
            concurrence = concurrence_x_form(state)
            data.append({
                "Quantity": f"concurrence, {label}",
                "Exact": "0" if concurrence.exact_zero else "> 0",
                "Value": format_decimal(concurrence.value),
            })
            data.append({
                "Quantity": f"entanglement of formation, {label}",
                "Exact": "",
                "Value": format_decimal(eof_from_concurrence(concurrence.value)),
            })
    if spec.m_outputs >= 3:
        verdict = ppt_three_clone(three_clone_state(spec))
        data.append({"Quantity": "three clones", "Exact": verdict.description, "Value": ""})
    return data


def describe_cloner(spec: CloneSpec) -> str:
    """Returns a formatted table with the fidelity and the entanglement of every
    reduction available for the cloner."""
    return tabulate(cloner_summary(spec), headers="keys", tablefmt="grid")
