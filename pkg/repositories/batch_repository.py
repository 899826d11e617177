import csv
import logging

from marshmallow import ValidationError

from models.divisor import N_POINTS

logger = logging.getLogger(__name__)


class BatchRepository:
    """Multiplicity vectors from a CSV file, one per line; ``#`` starts a comment line."""

    def __init__(self, path):
        self.path = path

    def get_all(self):
        rows = []
        with open(self.path, newline="") as handle:
            for lineno, record in enumerate(csv.reader(handle), start=1):
                fields = [value.strip() for value in record if value.strip()]
                if not fields or fields[0].startswith("#"):
                    continue
                if len(fields) > N_POINTS:
                    raise ValidationError({"batch": [f"line {lineno}: more than {N_POINTS} multiplicities"]})
                rows.append(fields)
        logger.info(f"Read {len(rows)} multiplicity vectors from {self.path}")
        return rows
