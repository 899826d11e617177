from marshmallow import Schema, fields

from dto.divisor_dto import CurveClassSchema


class ClassTextField(fields.Field):
    def _serialize(self, value, attr, obj, **kwargs):
        return None if value is None else value.to_text()


class DispatchEventSchema(Schema):
    class Meta:
        ordered = True

    case = fields.Method("get_case")
    cls = ClassTextField(data_key="class")
    h0 = fields.Int()
    h0_next = fields.Int()
    ker = fields.Int()
    cok = fields.Int()
    curve = fields.Method("get_curve")
    r = fields.Int(allow_none=True)

    def get_case(self, obj):
        return obj.case.value

    def get_curve(self, obj):
        return None if obj.curve is None else obj.curve.cls.to_text()


class MuRankReportSchema(Schema):
    class Meta:
        ordered = True

    cls = ClassTextField(data_key="class")
    ker = fields.Int()
    cok = fields.Int()
    trace = fields.List(fields.Nested(DispatchEventSchema))


class QLReportSchema(Schema):
    class Meta:
        ordered = True

    cls = ClassTextField(data_key="class")
    q = fields.Int()
    l = fields.Int()
    q_star = fields.Int()
    l_star = fields.Int()


class SubtractionSchema(Schema):
    class Meta:
        ordered = True

    curve = fields.Method("get_curve")
    multiplicity = fields.Method("get_multiplicity")

    def get_curve(self, obj):
        return obj[0].cls.to_text()

    def get_multiplicity(self, obj):
        return obj[1]


class ReductionReportSchema(Schema):
    class Meta:
        ordered = True

    original = ClassTextField()
    subtracted = fields.List(fields.Nested(SubtractionSchema))
    residual = ClassTextField()
    verdict = fields.Method("get_verdict")

    def get_verdict(self, obj):
        return obj.verdict.value


class CohomologySchema(Schema):
    class Meta:
        ordered = True

    cls = ClassTextField(data_key="class")
    h0 = fields.Int()
    h1 = fields.Int()
    h2 = fields.Int()
    chi = fields.Int()
    nef = fields.Bool()
    reduction = fields.Nested(ReductionReportSchema)
    special = fields.Nested("SpecialH1Schema", allow_none=True)


class CurveTableSchema(Schema):
    class Meta:
        ordered = True

    kind = fields.Str()
    count = fields.Int()
    curves = fields.List(fields.Nested(CurveClassSchema))


class SpecialH1Schema(Schema):
    """``F = r H + K`` with H a square-zero curve."""

    class Meta:
        ordered = True

    r = fields.Method("get_r")
    curve = fields.Method("get_curve")

    def get_r(self, obj):
        return obj[0]

    def get_curve(self, obj):
        return obj[1].cls.to_text()
