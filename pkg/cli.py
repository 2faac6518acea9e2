# cli.py
# ShuffleLDP v1.0.0 - Interfaccia a riga di comando
# ============================================================================
# Sottocomandi:
#   simulate               pipeline client → (shuffle) → server su popolazioni sintetiche
#   bound                  calcolatore di amplificazione (+ RDP, gruppi, round)
#   verify-amplification   certificazione con l'oracolo esatto
#   cover                  copertura diadica di [1, t]
#   estimate               aggregazione offline di un file di report
#
# Exit code: 0 ok, 2 parametri non validi / fuori regime, 3 certificazione fallita.
# Output (JSON/CSV) su stdout o su file; log su stderr.
# ============================================================================

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from config import (
    VERSION_STRING,
    INPUT_MODELS,
    SHUFFLE_MODES,
    LEVEL_SCALINGS,
    EXIT_OK,
    EXIT_INVALID,
    EXIT_CERTIFICATION_FAILED,
    load_settings,
    configure_logging,
)
from core.amplification import (
    amplify_group,
    amplify_shuffle,
    amplify_swap,
    binary_case_bound,
    rdp_bound,
    rdp_to_dp,
    shuffled_rounds_epsilon,
)
from core.divergence import certify_amplification
from core.errors import InputParseError, InvalidParameterError, ShuffleLDPError
from export.exporters import (
    estimates_to_csv,
    load_reports,
    records_to_jsonl,
    reports_to_jsonl,
    results_to_json,
    rows_to_csv,
    write_text,
)
from harness.simulation import SimulationConfig, simulate
from longitudinal.aggregator import accumulate, dyadic_cover, estimate_marginals

logger = logging.getLogger(__name__)


# ============================================================================
# PARSER
# ============================================================================

def build_parser(settings: Optional[Dict[str, Any]] = None) -> argparse.ArgumentParser:
    """Parser con i default presi da shuffle_ldp.yaml."""
    settings = settings or load_settings()
    sim = settings["simulation"]
    amp = settings["amplification"]

    parser = argparse.ArgumentParser(
        prog="shuffle-ldp",
        description="Raccolta longitudinale LDP e amplificazione per shuffling",
    )
    parser.add_argument("--version", action="version", version=f"shuffle-ldp {VERSION_STRING}")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log DEBUG su stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    p_sim = commands.add_parser("simulate", help="Simula client, shuffle e server")
    p_sim.add_argument("--n", type=int, default=sim["n"], help="Numero di client")
    p_sim.add_argument("--d", type=int, default=sim["d"], help="Orizzonte temporale")
    p_sim.add_argument("--k", type=int, default=sim["k"], help="Budget di cambi per client")
    p_sim.add_argument("--epsilon", type=float, default=sim["epsilon"], help="Budget LDP per client")
    p_sim.add_argument("--beta", type=float, default=sim["beta"], help="Probabilità di fallimento del bound")
    p_sim.add_argument("--delta", type=float, default=sim["delta"], help="δ per l'ε centrale in post-shuffle")
    p_sim.add_argument("--trials", type=int, default=sim["trials"])
    p_sim.add_argument("--seed", type=int, default=sim["seed"])
    p_sim.add_argument("--input-model", choices=sorted(INPUT_MODELS), default=sim["input_model"])
    p_sim.add_argument("--input-path", default=None, help="File JSON-lines per --input-model file")
    p_sim.add_argument("--step-time", type=int, default=sim["step_time"])
    p_sim.add_argument("--shuffle-mode", choices=sorted(SHUFFLE_MODES), default=sim["shuffle_mode"])
    p_sim.add_argument("--level-scaling", choices=sorted(LEVEL_SCALINGS), default=sim["level_scaling"])
    p_sim.add_argument("--output", default=None, help="File .json (esecuzione) o .csv (una riga per prova)")
    p_sim.add_argument("--reports", default=None, help="Scrive i report della prova 0 in JSON-lines")
    p_sim.add_argument("--debug-ids", action="store_true", help="Aggiunge client_id ai report (solo shuffle-mode none)")
    p_sim.add_argument("--threads", type=int, default=None)
    p_sim.add_argument("--allow-large", action="store_true", help="Disattiva il limite su n·d")
    p_sim.add_argument("--timing", action="store_true", help="Include wall_time nell'output")

    p_bound = commands.add_parser("bound", help="Bound di amplificazione")
    p_bound.add_argument("--eps0", type=float, default=amp["epsilon0"])
    p_bound.add_argument("--n", type=int, default=amp["n"])
    p_bound.add_argument("--delta", type=float, default=amp["delta"])
    p_bound.add_argument("--alpha", type=float, default=None, help="Ordine RDP")
    p_bound.add_argument("--group", type=int, default=None, help="Dimensione |S| del gruppo")
    p_bound.add_argument("--rounds", type=int, default=None, help="Uscite mescolate da comporre")

    p_verify = commands.add_parser("verify-amplification", help="Certifica il bound con l'oracolo esatto")
    p_verify.add_argument("--n", type=int, default=amp["n"])
    p_verify.add_argument("--eps0", type=float, default=amp["epsilon0"])
    p_verify.add_argument("--delta", type=float, default=amp["delta"])
    p_verify.add_argument("--grid", default=None, help="CSV di triple n,eps0,delta")
    p_verify.add_argument("--threads", type=int, default=None)

    p_cover = commands.add_parser("cover", help="Copertura diadica di [1, t]")
    p_cover.add_argument("--t", type=int, required=True)
    p_cover.add_argument("--d", type=int, required=True)

    p_est = commands.add_parser("estimate", help="Aggrega un file di report")
    p_est.add_argument("--reports", required=True, help="File JSON-lines di report")
    p_est.add_argument("--d", type=int, required=True)
    p_est.add_argument("--k", type=int, default=sim["k"])
    p_est.add_argument("--epsilon", type=float, default=sim["epsilon"])
    p_est.add_argument("--level-scaling", choices=sorted(LEVEL_SCALINGS), default=sim["level_scaling"])
    p_est.add_argument("--output", default=None, help="File CSV (default stdout)")

    return parser


# ============================================================================
# COMANDI
# ============================================================================

def _emit(text: str, path: Optional[str]) -> None:
    if path:
        write_text(path, text)
    else:
        sys.stdout.write(text)


def cmd_simulate(args: argparse.Namespace) -> int:
    config = SimulationConfig(
        n=args.n,
        d=args.d,
        k=args.k,
        epsilon=args.epsilon,
        beta=args.beta,
        trials=args.trials,
        seed=args.seed,
        input_model=args.input_model,
        shuffle_mode=args.shuffle_mode,
        output_path=args.output,
        delta=args.delta,
        step_time=args.step_time,
        input_path=args.input_path,
        level_scaling=args.level_scaling,
        report_path=args.reports,
        debug_ids=args.debug_ids,
        allow_large=args.allow_large,
        threads=args.threads,
    )
    run = simulate(config)

    if args.output and Path(args.output).suffix.lower() == ".csv":
        rows = [
            {**config.to_dict(), **r.to_dict(include_timing=args.timing, include_vectors=False)}
            for r in run.results
        ]
        _emit(rows_to_csv(rows), args.output)
    else:
        _emit(results_to_json(run.to_dict(include_timing=args.timing)), args.output)

    if args.reports:
        sample = run.sample_reports
        with_ids = args.debug_ids and config.shuffle_mode == "none"
        if args.debug_ids and not with_ids:
            logger.warning("debug_ids_ignored mode=%s", config.shuffle_mode)
        write_text(args.reports, reports_to_jsonl(sample, sample.client.tolist() if with_ids else None))
    return EXIT_OK


def bound_payload(
    epsilon0: float,
    n: int,
    delta: float,
    alpha: Optional[float] = None,
    group: Optional[int] = None,
    rounds: Optional[int] = None,
) -> Dict[str, Any]:
    """Tutti i bound applicabili in un unico dizionario (usato anche dalla UI)."""
    shuffle = amplify_shuffle(epsilon0, n, delta)
    swap = amplify_swap(epsilon0, n, delta)
    payload: Dict[str, Any] = {
        "epsilon0": epsilon0,
        "n": n,
        "delta": delta,
        "epsilon_1": shuffle.epsilon_1,
        "bounds": shuffle.bounds,
        "regime": shuffle.regime,
        "epsilon_central": shuffle.epsilon_central,
        "swap": {"epsilon": swap.epsilon_central, "regime": swap.regime, "index_one_only": True},
        "binary_case_reference": binary_case_bound(epsilon0, n, delta),
    }
    if alpha is not None:
        rdp = rdp_bound(epsilon0, n, alpha)
        payload["rdp"] = {
            "alpha": alpha,
            "rdp_epsilon": rdp,
            "dp_epsilon": rdp_to_dp(rdp, alpha, delta) if alpha > 1 else None,
        }
    if group is not None:
        grouped = amplify_group(epsilon0, group, delta)
        payload["group"] = {"size": group, "epsilon": grouped.epsilon_central, "regime": grouped.regime}
    if rounds is not None:
        payload["rounds"] = shuffled_rounds_epsilon(epsilon0, n, rounds, delta)
    return payload


def cmd_bound(args: argparse.Namespace) -> int:
    payload = bound_payload(args.eps0, args.n, args.delta, args.alpha, args.group, args.rounds)
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    return EXIT_OK


def parse_grid(text: str) -> List[Tuple[int, float, float]]:
    """
    Triple n,eps0,delta da CSV; un'intestazione non numerica è ignorata.

    Raises:
        InputParseError: riga con campi mancanti o non numerici
    """
    triples = []
    for line_number, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not row or not "".join(row).strip():
            continue
        try:
            n, eps0, delta = (cell.strip() for cell in row)
            triples.append((int(n), float(eps0), float(delta)))
        except ValueError as e:
            if line_number == 1 and triples == []:
                continue
            raise InputParseError(f"attesa una tripla n,eps0,delta: {row}", line_number) from e
    return triples


def cmd_verify(args: argparse.Namespace) -> int:
    if args.grid:
        try:
            text = Path(args.grid).read_text(encoding="utf-8")
        except OSError as e:
            raise InvalidParameterError(f"impossibile leggere {args.grid}: {e}") from e
        triples = parse_grid(text)
    else:
        triples = [(args.n, args.eps0, args.delta)]

    all_passed = True
    for n, eps0, delta in triples:
        record = certify_amplification(n, eps0, delta, threads=args.threads)
        sys.stdout.write(records_to_jsonl([record.to_dict()]))
        sys.stdout.flush()
        all_passed = all_passed and record.passed
    return EXIT_OK if all_passed else EXIT_CERTIFICATION_FAILED


def cmd_cover(args: argparse.Namespace) -> int:
    cover = dyadic_cover(args.t, args.d)
    payload = {
        "t": args.t,
        "d": args.d,
        "nodes": [list(node) for node in cover.ordered()],
        "leaf_ranges": [list(r) for r in cover.leaf_ranges()],
    }
    sys.stdout.write(json.dumps(payload) + "\n")
    return EXIT_OK


def cmd_estimate(args: argparse.Namespace) -> int:
    try:
        reports = load_reports(args.reports)
    except OSError as e:
        raise InvalidParameterError(f"impossibile leggere {args.reports}: {e}") from e
    tree = accumulate(reports, args.d)
    estimates = estimate_marginals(tree, args.epsilon, args.k, args.d, level_scaling=args.level_scaling)
    _emit(estimates_to_csv(estimates), args.output)
    return EXIT_OK


_COMMANDS = {
    "simulate": cmd_simulate,
    "bound": cmd_bound,
    "verify-amplification": cmd_verify,
    "cover": cmd_cover,
    "estimate": cmd_estimate,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; ritorna l'exit code invece di chiamare sys.exit."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    try:
        return _COMMANDS[args.command](args)
    except ShuffleLDPError as e:
        sys.stderr.write(f"errore: {e}\n")
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
