import re

from marshmallow import Schema, ValidationError, fields, post_load, validate

from models.scheme import FatPointScheme


class MultiplicityList(fields.List):
    """Accepts ``"3,3,2"`` as well as a list of integers."""

    def __init__(self, **kwargs):
        super().__init__(fields.Int(strict=False, validate=validate.Range(min=0)), **kwargs)

    def _deserialize(self, value, attr, data, **kwargs):
        if isinstance(value, str):
            value = [tok for tok in re.split(r"[\s,]+", value.strip()) if tok]
        if not isinstance(value, (list, tuple)):
            raise ValidationError("expected a comma separated list of multiplicities")
        return super()._deserialize(list(value), attr, data, **kwargs)


class FatPointSchemeSchema(Schema):
    mults = MultiplicityList(required=True, validate=validate.Length(min=1, max=8))

    @post_load
    def make_scheme(self, data, **kwargs):
        return FatPointScheme(tuple(data["mults"]))


class GradedResolutionSchema(Schema):
    class Meta:
        ordered = True

    mults = fields.List(fields.Int())
    alpha = fields.Int()
    hilbert = fields.Method("get_hilbert")
    generators = fields.Method("get_generators")
    syzygies = fields.Method("get_syzygies")

    def get_hilbert(self, obj):
        return [[t, obj.hilbert[t]] for t in sorted(obj.hilbert)]

    def get_generators(self, obj):
        return {str(t): obj.generators[t] for t in sorted(obj.generators)}

    def get_syzygies(self, obj):
        return {str(t): obj.syzygies[t] for t in sorted(obj.syzygies)}


class HilbertWindowSchema(Schema):
    class Meta:
        ordered = True

    mults = fields.List(fields.Int())
    values = fields.Method("get_values", data_key="hilbert")

    def get_values(self, obj):
        return [[t, h] for t, h in obj["values"]]
