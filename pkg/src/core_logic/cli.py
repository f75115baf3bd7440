# src/core_logic/cli.py

"""
Command-line front end toolkit dualgi.

Setiap pemanggilan mencetak tepat satu dokumen laporan JSON ke stdout
(log hanya ke stderr dan file). Kode exit:
    0  sukses
    2  invers tidak ada / sistem tidak konsisten
    3  kesalahan parsing input, bentuk, atau argumen
    4  kegagalan numerik internal

Usage:
    python main.py ddgi --input datasets/ddgi_index2.json
    python main.py law --kind group --input a.json --input c.json --form general
    python main.py gen --family ordered --n 4 --r 2 --seed 7
"""

import argparse
import glob
import logging
import os
import sys
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import pandas as pd
from tqdm import tqdm

from src.core_logic.dsolve import general_solution, in_range_power, is_consistent, solve_unique
from src.core_logic.dualgi import (
    InverseKind,
    InverseResult,
    dcgi,
    ddgi,
    ddmpgi,
    dggi,
    dmpgi,
    mpdgi,
    verify_inverse,
)
from src.core_logic.dualmat import DualMatrix, apply, dual_distance
from src.core_logic.env_manager import load_and_log_config, load_env_variables, load_tolerances
from src.core_logic.errors import (
    BadShapeParams,
    DecompositionFailure,
    DualGIError,
    NoDDGI,
    ParseError,
    ShapeMismatch,
)
from src.core_logic.fixtures import (
    B4_MODES,
    COMMUTING_KINDS,
    gen_absorption_pair,
    gen_commuting_pair,
    gen_ddgi_canonical,
    gen_group_invertible,
    gen_ordered_chain,
    gen_ordered_pair,
)
from src.core_logic.laws import (
    GInverseKind,
    LawReport,
    absorption_check,
    check_order_law,
    d_core_leq,
    d_core_leq_char,
    d_group_leq,
    d_group_leq_char,
)
from src.core_logic.realgi import (
    Tolerances,
    core_inverse,
    core_residuals,
    drazin_inverse,
    drazin_residuals,
    group_inverse,
    group_residuals,
    index,
    mp_inverse,
    numerical_rank,
    penrose_residuals,
)
from src.core_logic.utils import dumps_report, parse_dual_matrix, parse_dual_vector, setup_logging, write_report

EXIT_OK = 0
EXIT_NONEXISTENT = 2
EXIT_INPUT = 3
EXIT_NUMERIC = 4

STATUS = {
    EXIT_OK: "ok",
    EXIT_NONEXISTENT: "nonexistent",
    EXIT_INPUT: "input_error",
    EXIT_NUMERIC: "numerical_failure",
}

REAL_OPS = ("rank", "index", "pinv", "ginv", "dinv", "coreinv")
DUAL_OPS = ("mpdgi", "dmpgi", "dggi", "dcgi", "ddgi", "ddmpgi")
GEN_FAMILIES = ("ddgi", "group", "ordered", "chain", "commuting", "absorption")

_DUAL_CONSTRUCTORS = {"dmpgi": dmpgi, "dggi": dggi, "dcgi": dcgi, "ddgi": ddgi, "ddmpgi": ddmpgi}

Outcome = Tuple[Dict[str, Any], Any, int, str]


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser yang melempar ParseError (exit 3) alih-alih keluar dengan kode 2."""

    def error(self, message):
        raise ParseError(f"Argumen tidak valid: {message}")


def exit_code_for(exc: BaseException) -> int:
    """Memetakan exception ke kode exit publik."""
    if isinstance(exc, (ParseError, ShapeMismatch, BadShapeParams)):
        return EXIT_INPUT
    if isinstance(exc, (DecompositionFailure, np.linalg.LinAlgError)):
        return EXIT_NUMERIC
    if isinstance(exc, DualGIError):
        return EXIT_NONEXISTENT
    if isinstance(exc, ValueError):
        return EXIT_INPUT
    return EXIT_NUMERIC


# ---------------------------------------------------------------------------
# Operasi dengan satu input matriks
# ---------------------------------------------------------------------------

def _real_op(op: str, A: np.ndarray, tol: Tolerances) -> Dict[str, Any]:
    if op == "rank":
        return {"value": numerical_rank(A, tol)}
    if op == "index":
        return {"value": index(A, tol)}
    if op == "pinv":
        X = mp_inverse(A, tol)
        residuals = penrose_residuals(A, X)
    elif op == "ginv":
        X = group_inverse(A, tol)
        residuals = group_residuals(A, X)
    elif op == "dinv":
        X, k = drazin_inverse(A, tol)
        residuals = drazin_residuals(A, X, k)
        return {"inverse": X, "k": k, "residuals": residuals, "max_residual": max(residuals.values())}
    else:
        X = core_inverse(A, tol)
        residuals = core_residuals(A, X)
    return {"inverse": X, "residuals": residuals, "max_residual": max(residuals.values())}


def inverse_payload(result: InverseResult) -> Dict[str, Any]:
    """Isi laporan untuk sebuah InverseResult; residual selalu ikut, juga saat sukses."""
    return {
        "kind": result.kind.value,
        "exists": result.exists,
        "k": result.k,
        "reason": result.reason,
        "inverse": result.inverse,
        "max_residual": result.report.max_residual(),
        "residuals": result.report.as_dict(),
    }


def run_single(op: str, M: DualMatrix, tol: Tolerances) -> Tuple[Dict[str, Any], int, str]:
    """Menjalankan satu operasi satu-input; mengembalikan (result, exit_code, message)."""
    if op in REAL_OPS:
        return _real_op(op, M.real, tol), EXIT_OK, f"{op} selesai"
    if op == "mpdgi":
        X = mpdgi(M, tol)
        report = verify_inverse(InverseKind.MPDGI, M, X, tol=tol)
        return ({"kind": InverseKind.MPDGI.value, "exists": True, "inverse": X,
                 "max_residual": report.max_residual(), "residuals": report.as_dict()},
                EXIT_OK, "MPDGI selalu terdefinisi")
    result = _DUAL_CONSTRUCTORS[op](M, tol)
    if result.exists:
        return inverse_payload(result), EXIT_OK, f"{result.kind.value} ada"
    return inverse_payload(result), EXIT_NONEXISTENT, f"{result.kind.value} tidak ada: {result.reason}"


def _cmd_single(args: argparse.Namespace, tol: Tolerances, settings: Dict[str, str]) -> Outcome:
    if args.batch is not None:
        return _cmd_batch(args, tol, settings)
    if not args.input:
        raise ParseError("--input wajib diisi (atau gunakan --batch)")
    M = parse_dual_matrix(args.input)
    result, code, message = run_single(args.command, M, tol)
    return {"input": args.input, "matrix": M}, result, code, message


def _cmd_batch(args: argparse.Namespace, tol: Tolerances, settings: Dict[str, str]) -> Outcome:
    directory = args.batch or settings["DATASET_DIR"]
    files = sorted(glob.glob(os.path.join(directory, "*.json")))
    if not files:
        raise ParseError(f"Tidak ada file *.json di direktori batch '{directory}'")

    logging.info(f"📂 Batch {args.command}: {len(files)} file dari '{directory}'")
    entries: Dict[str, Any] = {}
    rows: List[Dict[str, Any]] = []
    for path in tqdm(files, desc=f"Batch {args.command}", unit="file"):
        name = os.path.basename(path)
        try:
            result, code, message = run_single(args.command, parse_dual_matrix(path), tol)
        except Exception as e:
            result, code, message = None, exit_code_for(e), str(e)
            logging.warning(f"⚠️ {name}: {message}")
        entries[name] = {"status": STATUS[code], "exit_code": code, "message": message, "result": result}
        rows.append({
            "file": name,
            "operation": args.command,
            "status": STATUS[code],
            "exists": result.get("exists") if result else None,
            "max_residual": result.get("max_residual") if result else None,
        })

    if args.summary:
        summary_path = args.summary if os.path.dirname(args.summary) else os.path.join(settings["OUTPUT_DIR"], args.summary)
        os.makedirs(os.path.dirname(summary_path), exist_ok=True)
        df = pd.DataFrame(rows, columns=["file", "operation", "status", "exists", "max_residual"])
        if summary_path.lower().endswith(".xlsx"):
            df.to_excel(summary_path, index=False)
        else:
            df.to_csv(summary_path, index=False)
        logging.info(f"💾 Ringkasan batch disimpan ke {summary_path}")

    code = max((entry["exit_code"] for entry in entries.values()), default=EXIT_OK)
    failed = sum(1 for entry in entries.values() if entry["exit_code"] != EXIT_OK)
    return ({"batch": directory, "files": list(entries)}, entries, code,
            f"{len(entries)} file diproses, {failed} tidak sukses")


# ---------------------------------------------------------------------------
# Operasi dengan beberapa input
# ---------------------------------------------------------------------------

def _cmd_solve(args: argparse.Namespace, tol: Tolerances, settings: Dict[str, str]) -> Outcome:
    M = parse_dual_matrix(args.input)
    b = parse_dual_vector(args.rhs)
    z = parse_dual_vector(args.z) if args.z else None
    inputs = {"input": args.input, "matrix": M, "rhs": b, "z": z}

    drazin = ddgi(M, tol)
    if not drazin.exists:
        raise NoDDGI(f"DDGI tidak ada ({drazin.reason}); sistem tidak bisa diselesaikan")
    if not is_consistent(M, b, tol):
        return inputs, {"k": drazin.k, "consistent": False}, EXIT_NONEXISTENT, "Sistem tidak konsisten"

    x = solve_unique(M, b, tol)
    result = {
        "k": drazin.k,
        "consistent": True,
        "solution": x,
        "residual": dual_distance(apply(M, x), b),
        "in_range_power": in_range_power(M, x, tol),
    }
    if z is not None:
        general = general_solution(M, b, z, tol)
        result["general_solution"] = general
        result["general_residual"] = dual_distance(apply(M, general), b)
    return inputs, result, EXIT_OK, "Sistem diselesaikan"


def _cmd_verify(args: argparse.Namespace, tol: Tolerances, settings: Dict[str, str]) -> Outcome:
    kind = InverseKind(args.kind.upper())
    M = parse_dual_matrix(args.input)
    X = parse_dual_matrix(args.candidate)
    report = verify_inverse(kind, M, X, args.k, tol)
    result = {
        "kind": kind.value,
        "passes": report.passes(tol),
        "max_residual": report.max_residual(),
        "residuals": report.as_dict(),
    }
    inputs = {"input": args.input, "matrix": M, "candidate": args.candidate, "candidate_matrix": X}
    return inputs, result, EXIT_OK, "Kandidat lolos" if result["passes"] else "Kandidat tidak lolos"


def _two_inputs(args: argparse.Namespace) -> Tuple[DualMatrix, DualMatrix, Dict[str, Any]]:
    if not args.input or len(args.input) != 2:
        raise ParseError("Perintah ini membutuhkan tepat dua --input")
    first, second = (parse_dual_matrix(path) for path in args.input)
    inputs = {"inputs": [{"input": path, "matrix": M} for path, M in zip(args.input, (first, second))]}
    return first, second, inputs


def law_payload(report: LawReport) -> Dict[str, Any]:
    return {
        "kind": report.kind,
        "hypotheses": {name: {"holds": flag.holds, "residual": flag.residual}
                       for name, flag in report.hypotheses.items()},
        "all_hypotheses": report.all_hypotheses,
        "reverse_holds": report.reverse_holds,
        "forward_holds": report.forward_holds,
        "absorption_holds": report.absorption_holds,
        "distances": report.distances,
    }


def _cmd_law(args: argparse.Namespace, tol: Tolerances, settings: Dict[str, str]) -> Outcome:
    first, second, inputs = _two_inputs(args)
    if args.kind == "absorption":
        report = absorption_check(first, second, tol)
    else:
        report = check_order_law(GInverseKind(args.kind), first, second, tol, args.form)
    inputs["form"] = args.form
    return inputs, law_payload(report), EXIT_OK, f"Hukum {args.kind} diperiksa"


def _cmd_order(args: argparse.Namespace, tol: Tolerances, settings: Dict[str, str]) -> Outcome:
    first, second, inputs = _two_inputs(args)
    if args.kind == "group":
        leq, leq_char = d_group_leq(first, second, tol), d_group_leq_char(first, second, tol)
    else:
        leq, leq_char = d_core_leq(first, second, tol), d_core_leq_char(first, second, tol)
    if leq != leq_char:
        logging.warning(f"⚠️ Definisi dan karakterisasi orde D-{args.kind} tidak sepakat")
    result = {"order": args.kind, "leq": leq, "leq_char": leq_char, "agree": leq == leq_char}
    return inputs, result, EXIT_OK, f"Orde D-{args.kind} diperiksa"


def _cmd_gen(args: argparse.Namespace, tol: Tolerances, settings: Dict[str, str]) -> Outcome:
    family, n, r, seed = args.family, args.n, args.r, args.seed
    inputs = {"family": family, "n": n, "r": r, "k": args.k, "s": args.s,
              "kind": args.kind, "b4": args.b4, "seed": seed}
    if family == "ddgi":
        fixture = gen_ddgi_canonical(n, r, args.k, seed, b4=args.b4)
        result = {"matrix": fixture.assemble(), "k": fixture.k}
    elif family == "group":
        result = {"matrix": gen_group_invertible(n, r, seed, b4=args.b4)}
    elif family == "ordered":
        lower, upper = gen_ordered_pair(n, r, seed)
        result = {"lower": lower, "upper": upper}
    elif family == "chain":
        x, y, z = gen_ordered_chain(n, r, args.s, seed)
        result = {"x": x, "y": y, "z": z}
    elif family == "commuting":
        a, c = gen_commuting_pair(args.kind, n, seed)
        result = {"a": a, "c": c}
    else:
        a, c = gen_absorption_pair(n, seed)
        result = {"a": a, "c": c}
    return inputs, result, EXIT_OK, f"Fixture {family} dibangkitkan"


# ---------------------------------------------------------------------------
# Parser dan entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--tol-rank", type=float, default=None, help="Ambang rank relatif (default dari DUALGI_TOL_RANK)")
    common.add_argument("--tol-resid", type=float, default=None, help="Ambang residual relatif (default dari DUALGI_TOL_RESID)")
    common.add_argument("--output", type=str, default=None, help="Simpan laporan juga ke file ini")
    common.add_argument("--seed", type=int, default=0, help="Seed untuk generator fixture")
    common.add_argument("--log-dir", type=str, default=None, help="Direktori log (default LOG_DIR; kosong = tanpa file log)")
    common.add_argument("--log-level", type=str, default=None, help="Level log (default LOG_LEVEL)")

    parser = _ArgumentParser(
        prog="dualgi",
        description="Invers tergeneralisasi untuk matriks dual",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Contoh penggunaan:
  python main.py rank --input datasets/identity3.json
  python main.py ddgi --input datasets/ddgi_index2.json
  python main.py ddgi --batch datasets --summary ringkasan.xlsx
  python main.py solve --input datasets/ddgi_index2.json --rhs b.json --z z.json
  python main.py order --kind group --input x.json --input y.json
        """,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for op in REAL_OPS + DUAL_OPS:
        p = sub.add_parser(op, parents=[common], help=f"Operasi {op}")
        p.add_argument("--input", type=str, help="File JSON {real, dual}")
        p.add_argument("--batch", nargs="?", const="", default=None,
                       help="Proses semua *.json di direktori (default DATASET_DIR)")
        p.add_argument("--summary", type=str, default=None, help="Ringkasan batch (.csv atau .xlsx)")
        p.set_defaults(handler=_cmd_single)

    p = sub.add_parser("solve", parents=[common], help="Selesaikan Âx̂ = b̂ lewat DDGI")
    p.add_argument("--input", type=str, required=True)
    p.add_argument("--rhs", type=str, required=True, help="Vektor b̂ (kolom tunggal)")
    p.add_argument("--z", type=str, default=None, help="Parameter ẑ untuk solusi umum")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("verify", parents=[common], help="Cek residual kandidat invers")
    p.add_argument("--kind", type=str.upper, choices=[kind.value for kind in InverseKind], required=True)
    p.add_argument("--input", type=str, required=True)
    p.add_argument("--candidate", type=str, required=True)
    p.add_argument("--k", type=int, default=None, help="Index untuk DDGI/DDMPGI (default index(A))")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("law", parents=[common], help="Hukum urutan reverse/forward atau absorption")
    p.add_argument("--kind", choices=[kind.value for kind in GInverseKind] + ["absorption"], required=True)
    p.add_argument("--input", action="append", required=True)
    p.add_argument("--form", choices=["particular", "general"], default="particular")
    p.set_defaults(handler=_cmd_law)

    p = sub.add_parser("order", parents=[common], help="Orde parsial D-group / D-core")
    p.add_argument("--kind", choices=["group", "core"], required=True)
    p.add_argument("--input", action="append", required=True)
    p.set_defaults(handler=_cmd_order)

    p = sub.add_parser("gen", parents=[common], help="Bangkitkan fixture ber-seed")
    p.add_argument("--family", choices=GEN_FAMILIES, required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--kind", choices=COMMUTING_KINDS, default="group")
    p.add_argument("--b4", choices=B4_MODES, default="zero")
    p.set_defaults(handler=_cmd_gen)
    return parser


def _emit(report: Dict[str, Any], output: Optional[str]) -> None:
    print(dumps_report(report))
    if output:
        write_report(report, output)
        logging.info(f"💾 Laporan disimpan ke {output}")


def _report(operation: Optional[str], tol: Optional[Tolerances], inputs: Any, result: Any,
            code: int, message: str) -> Dict[str, Any]:
    return {
        "operation": operation,
        "tolerances": {"rank_rel": tol.rank_rel, "resid_rel": tol.resid_rel} if tol else None,
        "inputs": inputs,
        "result": result,
        "status": STATUS[code],
        "message": message,
    }


def run(argv: Optional[List[str]] = None) -> int:
    """
    Menjalankan CLI dan mengembalikan kode exit. Laporan selalu dicetak ke stdout.
    """
    argv = sys.argv[1:] if argv is None else list(argv)
    settings = load_env_variables()
    try:
        args = build_parser().parse_args(argv)
    except ParseError as e:
        _emit(_report(argv[0] if argv else None, None, {"argv": argv}, None, EXIT_INPUT, str(e)), None)
        return EXIT_INPUT
    except SystemExit as e:
        return int(e.code or 0)

    setup_logging(settings["LOG_DIR"] if args.log_dir is None else args.log_dir,
                  args.log_level or settings["LOG_LEVEL"])
    logging.info(f"🚀 Menjalankan perintah '{args.command}'")

    tol = None
    inputs: Any = {}
    try:
        settings, _ = load_and_log_config()
        if args.tol_rank is not None:
            settings["DUALGI_TOL_RANK"] = str(args.tol_rank)
        if args.tol_resid is not None:
            settings["DUALGI_TOL_RESID"] = str(args.tol_resid)
        tol = load_tolerances(settings)
        inputs, result, code, message = args.handler(args, tol, settings)
    except Exception as e:
        code = exit_code_for(e)
        result, message = None, str(e)
        if code == EXIT_NUMERIC:
            logging.exception(f"💥 Kegagalan numerik pada '{args.command}'")
        else:
            logging.error(f"❌ {type(e).__name__}: {e}")

    _emit(_report(args.command, tol, inputs, result, code, message), args.output)
    logging.info(f"🏁 Selesai dengan kode exit {code} ({STATUS[code]})")
    return code


if __name__ == "__main__":
    sys.exit(run())
