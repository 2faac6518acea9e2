# export/exporters.py
# ShuffleLDP v1.0.0 - Funzioni export report, stime e risultati
# ============================================================================
# JSON-lines per i report (anonimi; client_id solo in debug, marcato),
# CSV per stime e sweep (float a 17 cifre), JSON per singole simulazioni
# (float in repr round-trip). Output deterministico: nessun timestamp.
# ============================================================================

import csv
import io
import json
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

import numpy as np

from config import CSV_FLOAT_FORMAT, VERSION
from core.errors import InputParseError, MalformedReportError
from longitudinal.aggregator import MarginalEstimates
from longitudinal.models import Report
from longitudinal.population import PopulationReports


def format_float(value: float) -> str:
    """Float con 17 cifre significative (round-trip esatto)."""
    return format(float(value), CSV_FLOAT_FORMAT)


def _plain(value: Any) -> Any:
    """Converte tipi numpy in tipi JSON nativi, ricorsivamente."""
    if isinstance(value, dict):
        return {key: _plain(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]
    if isinstance(value, np.ndarray):
        return [_plain(item) for item in value.tolist()]
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.bool_):
        return bool(value)
    return value


# ============================================================================
# REPORT (JSON-LINES)
# ============================================================================

def reports_to_jsonl(
    reports: Union[PopulationReports, Iterable[Report]],
    client_ids: Optional[Sequence[int]] = None,
) -> str:
    """
    Serializza i report, uno per riga: {"h": …, "t": …, "u": …}.

    Args:
        reports: PopulationReports o sequenza di Report
        client_ids: Solo in modalità debug: aggiunge client_id e "debug": true

    Returns:
        Stringa JSON-lines (vuota se non ci sono report)
    """
    if isinstance(reports, PopulationReports):
        rows = zip(reports.h.tolist(), reports.t.tolist(), reports.u.tolist())
    else:
        rows = ((r.h, r.t, r.u) for r in reports)

    lines = []
    ids = None if client_ids is None else list(client_ids)
    for index, (h, t, u) in enumerate(rows):
        record: Dict[str, Any] = {"h": int(h), "t": int(t), "u": int(u)}
        if ids is not None:
            record["client_id"] = int(ids[index])
            record["debug"] = True
        lines.append(json.dumps(record))
    return "".join(line + "\n" for line in lines)


def parse_reports_jsonl(text: str) -> List[Report]:
    """
    Legge report JSON-lines; righe vuote ignorate.

    Raises:
        InputParseError: riga non JSON o report malformato (con numero di riga)
    """
    reports = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            data = json.loads(line)
        except json.JSONDecodeError as e:
            raise InputParseError(f"JSON non valido: {e.msg}", line_number) from e
        if not isinstance(data, dict):
            raise InputParseError("atteso un oggetto JSON", line_number)
        try:
            reports.append(Report.from_dict(data))
        except MalformedReportError as e:
            raise InputParseError(str(e), line_number) from e
    return reports


def load_reports(path: Union[str, Path]) -> List[Report]:
    with open(path, "r", encoding="utf-8") as f:
        return parse_reports_jsonl(f.read())


# ============================================================================
# STIME (CSV)
# ============================================================================

def estimates_to_csv(estimates: MarginalEstimates) -> str:
    """Colonne t, f_tilde (+ f_true, abs_error in simulazione)."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    with_truth = estimates.true_f is not None
    writer.writerow(["t", "f_tilde", "f_true", "abs_error"] if with_truth else ["t", "f_tilde"])
    errors = estimates.abs_errors() if with_truth else None
    for index, value in enumerate(estimates.f_tilde.tolist()):
        row = [index + 1, format_float(value)]
        if with_truth:
            row += [int(estimates.true_f[index]), format_float(errors[index])]
        writer.writerow(row)
    return buffer.getvalue()


# ============================================================================
# RISULTATI
# ============================================================================

def results_to_json(payload: Dict[str, Any]) -> str:
    """JSON indentato di un'esecuzione, con versione."""
    export_data = {"version": VERSION, **_plain(payload)}
    return json.dumps(export_data, indent=2, ensure_ascii=False) + "\n"


def rows_to_csv(rows: Sequence[Dict[str, Any]]) -> str:
    """
    Una riga per record; le colonne seguono le chiavi del primo record.

    Float a 17 cifre, liste scritte come JSON.
    """
    buffer = io.StringIO()
    if not rows:
        return ""
    columns = list(rows[0].keys())
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        cells = []
        for column in columns:
            value = _plain(row.get(column))
            if isinstance(value, bool) or value is None:
                cells.append("" if value is None else str(value).lower())
            elif isinstance(value, float):
                cells.append(format_float(value))
            elif isinstance(value, (list, dict)):
                cells.append(json.dumps(value))
            else:
                cells.append(value)
        writer.writerow(cells)
    return buffer.getvalue()


def records_to_jsonl(records: Iterable[Dict[str, Any]]) -> str:
    """Un oggetto JSON per riga (es. record di certificazione)."""
    return "".join(json.dumps(_plain(record)) + "\n" for record in records)


def write_text(path: Union[str, Path], text: str) -> Path:
    """Scrive il testo creando le cartelle mancanti."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8", newline="")
    return target
