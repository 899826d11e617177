from marshmallow import Schema, fields, post_load, validate

from dto.scheme_dto import MultiplicityList
from models.scheme import FatPointScheme


class OracleCheckSchema(Schema):
    max_mult = fields.Int(load_default=3, validate=validate.Range(min=0))
    t_max = fields.Int(load_default=None, allow_none=True, validate=validate.Range(min=0))
    prime = fields.Int(load_default=1_000_003, validate=validate.Range(min=2))
    seeds = fields.List(fields.Int(), load_default=lambda: [0, 1], validate=validate.Length(min=1))
    mults = MultiplicityList(load_default=None, allow_none=True, validate=validate.Length(min=1, max=8))

    @post_load
    def make_scheme(self, data, **kwargs):
        if data.get("mults") is not None:
            data["mults"] = FatPointScheme(tuple(data["mults"]))
        return data


class OracleLineSchema(Schema):
    """One output line: every seed's oracle values for a single (mults, t)."""

    class Meta:
        ordered = True

    mults = fields.Method("get_mults")
    t = fields.Method("get_t")
    engine = fields.Method("get_engine")
    oracle = fields.Method("get_oracle")
    match = fields.Method("get_match")

    def get_mults(self, rows):
        return list(rows[0].mults)

    def get_t(self, rows):
        return rows[0].t

    def get_engine(self, rows):
        row = rows[0]
        return {"h": row.engine_h, "ker": row.engine_ker, "cok": row.engine_cok}

    def get_oracle(self, rows):
        return [{"seed": row.seed, "h": row.oracle_h, "ker": row.oracle_ker, "cok": row.oracle_cok} for row in rows]

    def get_match(self, rows):
        return all(row.match for row in rows)
