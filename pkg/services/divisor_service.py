from marshmallow import ValidationError

from dto.divisor_dto import CurveClassSchema, TripleSchema
from dto.report_dto import CurveTableSchema
from models.cone import cone_contains, cone_decompose, nearly_uniform_nef_generators
from models.divisor import CurveKind
from repositories.curve_repository import get_curve_repository


class DivisorService:
    def __init__(self, repository=None):
        self.repository = repository or get_curve_repository()
        self.table_schema = CurveTableSchema()
        self.curve_schema = CurveClassSchema()
        self.triple_schema = TripleSchema()

    def curves_payload(self, kind):
        try:
            kind = CurveKind(kind.replace("-", "_"))
        except ValueError:
            return {"error": {"kind": [f"unknown curve kind {kind!r}"]}}, 1
        curves = self.repository.get_all(kind)
        return self.table_schema.dump({"kind": kind.value, "count": len(curves), "curves": curves}), 0

    def cone_payload(self, data=None, decompose=False):
        """Generators when ``data`` is None, otherwise membership (or a decomposition) of one triple."""
        if data is None:
            return {"generators": self.triple_schema.dump(nearly_uniform_nef_generators(), many=True)}, 0
        try:
            triple = self.triple_schema.load(data)
            result = {"triple": self.triple_schema.dump(triple), "contains": cone_contains(triple)}
            if decompose:
                result["coefficients"] = cone_decompose(triple)
            return result, 0
        except ValidationError as err:
            return {"error": err.messages}, 1
