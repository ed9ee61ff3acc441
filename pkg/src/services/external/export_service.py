# src/services/external/export_service.py
import csv
import io
import json
import logging
from typing import Any

from src.core.exceptions import DataError, ImputeBenchError
from src.models.entities.error_profile_entity import ErrorProfile
from src.models.entities.imputer_entity import ImputationResult
from src.models.entities.sample_spec_entity import SampleSpec
from src.models.entities.time_series_entity import MissingnessMask, RunSummary, TimeSeries
from src.utils.formatters.number_formatter import format_real

logger: logging.Logger = logging.getLogger(__name__)


# ============================================================================
# FORMAT JSON CANONIQUE DU PROFIL D'ERREUR
# ============================================================================


def _reals(values: Any) -> str:
    return "[" + ",".join(format_real(v) for v in values) + "]"


def profile_to_json(profile: ErrorProfile) -> str:
    """
    Sérialise un profil en JSON canonique.

    Ordre des clés fixe (parameter, missing_percent, methods, seeds), méthodes
    dans l'ordre de configuration, réels sur 17 chiffres significatifs, aucun
    espace : deux profils égaux donnent des textes identiques à l'octet près.
    """
    methods = ",".join(
        "{"
        + f'"name":{json.dumps(name, ensure_ascii=False)},'
        + f'"means":{_reals(profile.means[name])},'
        + '"errall":['
        + ",".join(_reals(row) for row in profile.errall[name])
        + "]}"
        for name in profile.methods
    )
    seeds = ",".join("[" + ",".join(str(s) for s in row) + "]" for row in profile.seeds)
    return (
        "{"
        + f'"parameter":{json.dumps(profile.parameter, ensure_ascii=False)},'
        + f'"missing_percent":{_reals(profile.missing_percent)},'
        + f'"methods":[{methods}],'
        + f'"seeds":[{seeds}]'
        + "}\n"
    )


def profile_from_json(text: str) -> ErrorProfile:
    """Relit un profil produit par profile_to_json."""
    try:
        document = json.loads(text)
        methods = document["methods"]
        return ErrorProfile(
            parameter=str(document["parameter"]),
            missing_percent=tuple(float(v) for v in document["missing_percent"]),
            methods=tuple(str(m["name"]) for m in methods),
            means={str(m["name"]): tuple(float(v) for v in m["means"]) for m in methods},
            errall={
                str(m["name"]): tuple(tuple(float(v) for v in row) for row in m["errall"])
                for m in methods
            },
            seeds=tuple(tuple(int(s) for s in row) for row in document["seeds"]),
        )
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as e:
        raise DataError(f"Profil d'erreur JSON invalide : {e}") from e
    except ImputeBenchError as e:
        raise DataError(f"Profil d'erreur JSON incohérent : {e}") from e


def format_profile(profile: ErrorProfile) -> str:
    """Affichage façon errprof : paramètre, grille puis moyennes par méthode."""
    blocks = [
        f'$Parameter\n[1] "{profile.parameter}"',
        "$MissingPercent\n[1] " + " ".join(f"{v:g}" for v in profile.missing_percent),
    ]
    blocks.extend(
        f"${name}\n[1] " + " ".join(f"{v:.4g}" for v in profile.means[name])
        for name in profile.methods
    )
    return "\n\n".join(blocks) + "\n"


class ExportService:
    def __init__(self):
        logger.debug("ExportService initialized.")

    def write_text(self, filename: str, content: str, what: str) -> None:
        try:
            with open(filename, "w", encoding="utf-8", newline="") as f:
                f.write(content)
            logger.info(f"{what} exporté vers {filename}")
        except OSError as e:
            logger.error(f"Erreur d'export de {what} vers {filename}: {e}")
            raise ImputeBenchError(f"Impossible d'écrire {filename} : {e}") from e

    def export_profile_to_json(self, filename: str, profile: ErrorProfile) -> None:
        """Exporte le profil d'erreur au format JSON canonique."""
        self.write_text(filename, profile_to_json(profile), "Profil d'erreur")

    def load_profile_from_json(self, filename: str) -> ErrorProfile:
        try:
            with open(filename, encoding="utf-8") as f:
                text = f.read()
        except OSError as e:
            raise DataError(f"Lecture du profil impossible ({filename}) : {e}") from e
        return profile_from_json(text)

    def export_svg(self, filename: str, svg: str) -> None:
        self.write_text(filename, svg, "Figure SVG")

    def export_series_to_csv(self, filename: str, series: TimeSeries) -> None:
        """Une colonne `value`, réels sur 17 chiffres significatifs."""
        lines = ["value"] + [format_real(v) for v in series.values]
        self.write_text(filename, "\n".join(lines) + "\n", "Série")

    def export_masks_to_json(
        self, filename: str, samples: list[tuple[SampleSpec, MissingnessMask, RunSummary]]
    ) -> None:
        self.write_text(filename, masks_to_json(samples), "Masques")

    def export_imputed_to_csv(
        self,
        filename: str,
        series: TimeSeries,
        mask: MissingnessMask,
        results: dict[str, ImputationResult],
    ) -> None:
        """Exporte vérité, série masquée (NA) et une colonne par méthode."""
        logger.info(f"Exporting {len(results)} imputations to CSV: {filename}")
        self.write_text(filename, imputed_to_csv(series, mask, results), "Imputations")


def masks_to_json(samples: list[tuple[SampleSpec, MissingnessMask, RunSummary]]) -> str:
    """Liste JSON d'un document par tirage : paramètres, indices retirés, séquences."""
    documents = [
        {
            "scheme": spec.scheme.value,
            "percent_missing": spec.percent_missing,
            "block": spec.block,
            "block_is_percent": spec.block_is_percent,
            "seed": spec.seed,
            "series_length": mask.series_length,
            "removed": list(mask.removed),
            "run_lengths": list(summary.run_lengths),
        }
        for spec, mask, summary in samples
    ]
    return json.dumps(documents) + "\n"


def imputed_to_csv(
    series: TimeSeries, mask: MissingnessMask, results: dict[str, ImputationResult]
) -> str:
    """Colonnes index, original, masked (NA aux positions retirées) puis une par méthode."""
    removed = set(mask.removed)
    buffer = io.StringIO()
    writer = csv.DictWriter(
        buffer, fieldnames=["index", "original", "masked", *results], lineterminator="\n"
    )
    writer.writeheader()
    for i, value in enumerate(series.values):
        row = {
            "index": i,
            "original": format_real(value),
            "masked": "NA" if i in removed else format_real(value),
        }
        row.update({name: format_real(r.values[i]) for name, r in results.items()})
        writer.writerow(row)
    return buffer.getvalue()


def save_csv(series: TimeSeries, path: str) -> None:
    """Écrit la série (colonne `value`) ; relue à l'identique par load_csv."""
    ExportService().export_series_to_csv(path, series)
