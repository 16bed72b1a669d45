"""
Rendering of basis, character, relation and verification results as JSON, CSV or text.
"""

import csv
import json
from enum import Enum
from typing import TextIO

from fstype.common.base import Grade, HighestWeight, to_json_default
from fstype.admissibility.basis import Basis, q_series
from fstype.relations.base import GeneratorSet
from fstype.evaluation.presentation import VerificationSummary


class OutputFormat(Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


VERIFY_CSV_COLUMNS = ["degree", "weight", "numMonomials", "idealRank", "standardCount", "basisCount", "match"]


def _weight_text(weight: tuple[int, ...]) -> str:
    return ",".join(str(w) for w in weight)


def _header(highest_weight: HighestWeight, d_max: int) -> dict[str, object]:
    return {"ell": highest_weight.ell, "weights": list(highest_weight.k), "maxDegree": d_max}


def _dump(obj: object, stream: TextIO) -> None:
    json.dump(obj, stream, default=to_json_default, indent=2)
    stream.write("\n")


def write_basis(highest_weight: HighestWeight, d_max: int, basis: Basis, fmt: OutputFormat, stream: TextIO) -> None:
    """
    Write the admissible monomials of each degree.

    Parameters:
    highest_weight (HighestWeight): The highest weight.
    d_max (int): Degree truncation.
    basis (Basis): Output of enumerate_basis.
    fmt (OutputFormat): Output format.
    stream (TextIO): Destination.
    """
    ell = highest_weight.ell
    match fmt:
        case OutputFormat.JSON:
            report = _header(highest_weight, d_max)
            report["degrees"] = [{"degree": d, "monomials": ms} for d, ms in basis.items()]
            _dump(report, stream)
        case OutputFormat.CSV:
            writer = csv.writer(stream, lineterminator="\n")
            writer.writerow(["degree", "weight", "monomial"])
            for d, ms in basis.items():
                for m in ms:
                    writer.writerow([d, _weight_text(m.weight(ell)), str(m)])
        case OutputFormat.TEXT:
            for d, ms in basis.items():
                stream.write(f"{d} ({len(ms)}): {', '.join(str(m) for m in ms)}\n")


def write_character(highest_weight: HighestWeight, d_max: int, character: list[int] | dict[Grade, int], fmt: OutputFormat, stream: TextIO) -> None:
    """
    Write character coefficients, or per-(degree, weight) counts when refined.
    """
    refined = isinstance(character, dict)
    match fmt:
        case OutputFormat.JSON:
            report = _header(highest_weight, d_max)
            if refined:
                report["grades"] = [
                    {"degree": d, "weight": list(w), "count": c} for (d, w), c in character.items()
                ]
            else:
                report["coefficients"] = character
            _dump(report, stream)
        case OutputFormat.CSV:
            writer = csv.writer(stream, lineterminator="\n")
            if refined:
                writer.writerow(["degree", "weight", "count"])
                writer.writerows([d, _weight_text(w), c] for (d, w), c in character.items())
            else:
                writer.writerow(["degree", "count"])
                writer.writerows(enumerate(character))
        case OutputFormat.TEXT:
            if refined:
                for (d, w), c in character.items():
                    stream.write(f"{d} [{_weight_text(w)}]: {c}\n")
            else:
                stream.write(q_series(character) + "\n")


def write_relations(generator_set: GeneratorSet, fmt: OutputFormat, stream: TextIO) -> None:
    match fmt:
        case OutputFormat.JSON:
            report = _header(generator_set.highest_weight, generator_set.max_degree)
            report["generators"] = generator_set.entries
            _dump(report, stream)
        case OutputFormat.CSV:
            writer = csv.DictWriter(
                stream,
                fieldnames=["provenance", "degree", "weight", "leadingTerm", "polynomial"],
                lineterminator="\n",
            )
            writer.writeheader()
            for entry in generator_set:
                row = entry.as_json()
                row["weight"] = _weight_text(entry.grade[1])
                writer.writerow(row)
        case OutputFormat.TEXT:
            for line in generator_set.to_lines():
                stream.write(line + "\n")


def write_verification(summary: VerificationSummary, fmt: OutputFormat, stream: TextIO) -> None:
    """
    Write a verification summary: the full report as JSON, one row per block as
    CSV, or a table with mismatch details as text.
    """
    match fmt:
        case OutputFormat.JSON:
            _dump(summary, stream)
        case OutputFormat.CSV:
            writer = csv.DictWriter(stream, fieldnames=VERIFY_CSV_COLUMNS, lineterminator="\n")
            writer.writeheader()
            for report in summary.degrees:
                for block in report.blocks:
                    writer.writerow({
                        "degree": report.degree,
                        "weight": _weight_text(block.weight),
                        "numMonomials": block.num_monomials,
                        "idealRank": block.ideal_rank,
                        "standardCount": len(block.standard),
                        "basisCount": len(block.basis),
                        "match": block.match,
                    })
        case OutputFormat.TEXT:
            stream.write(f"Highest weight ({summary.highest_weight}), degrees 0..{summary.max_degree}\n")
            stream.write(f"{'degree':>6} {'weight':>12} {'monomials':>9} {'rank':>5} {'standard':>8} {'basis':>5} {'spanning':>8}  match\n")
            for report in summary.degrees:
                for block in report.blocks:
                    stream.write(
                        f"{report.degree:>6} {_weight_text(block.weight):>12} {block.num_monomials:>9} "
                        f"{block.ideal_rank:>5} {len(block.standard):>8} {len(block.basis):>5} "
                        f"{block.spanning_count:>8}  {block.match}\n"
                    )
                    for m in block.missing:
                        stream.write(f"    admissible, not standard: {m}\n")
                    for m in block.unexpected:
                        stream.write(f"    standard, not admissible: {m}\n")
            stream.write(f"match: {summary.match}\n")
