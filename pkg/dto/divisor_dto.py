from marshmallow import Schema, fields, post_load, validate

from models.divisor import DivisorClass, Triple


class DivisorClassSchema(Schema):
    class Meta:
        ordered = True

    d = fields.Int(required=True, strict=False)
    m = fields.List(fields.Int(strict=False), required=True, validate=validate.Length(max=8))
    text = fields.Method("get_text", dump_only=True)

    def get_text(self, obj):
        return obj.to_text()

    @post_load
    def make_divisor(self, data, **kwargs):
        return DivisorClass(data["d"], data["m"])


class CurveClassSchema(Schema):
    class Meta:
        ordered = True

    cls = fields.Method("get_cls", data_key="class")
    kind = fields.Method("get_kind")
    square = fields.Method("get_square")
    lam = fields.Int(data_key="lambda")
    Lam = fields.Int(data_key="Lambda")
    m_C = fields.Int()

    def get_cls(self, obj):
        return obj.cls.to_text()

    def get_kind(self, obj):
        return obj.kind.value

    def get_square(self, obj):
        return obj.cls.square()


class TripleSchema(Schema):
    class Meta:
        ordered = True

    d = fields.Int(required=True, strict=False)
    a = fields.Int(required=True, strict=False)
    b = fields.Int(required=True, strict=False)

    @post_load
    def make_triple(self, data, **kwargs):
        return Triple(data["d"], data["a"], data["b"])
