"""Report serializers. Every number is an exact integer or a ``"p/q"`` string."""
from fractions import Fraction

from rest_framework import serializers


class FractionField(serializers.Field):
    def to_representation(self, value):
        value = Fraction(value)
        if value.denominator == 1:
            return value.numerator
        return f"{value.numerator}/{value.denominator}"


class AbGroupField(serializers.Field):
    """``FgAbGroup`` in invariant-factor notation, e.g. ``Z/2 + Z^3``."""

    def to_representation(self, value):
        return str(value)


class MatrixField(serializers.Field):
    """An ``AbHom`` or ``IntMatrix`` as a list of rows."""

    def to_representation(self, value):
        matrix = getattr(value, "matrix", value)
        return matrix.to_rows()


class OmitNoneMixin:
    omit_if_none: tuple[str, ...] = ()

    def to_representation(self, instance):
        data = super().to_representation(instance)
        for name in self.omit_if_none:
            if data.get(name) is None:
                data.pop(name, None)
        return data


class TransferReportSerializer(serializers.Serializer):
    tk_order = serializers.IntegerField()
    tc_order = serializers.IntegerField()
    index = serializers.IntegerField()
    ratio = FractionField()
    hs_multiplier = FractionField()


class SectionCohomologySerializer(serializers.Serializer):
    c0 = AbGroupField()
    c1 = AbGroupField()
    k0 = AbGroupField()
    k1 = AbGroupField()


class AnalysisSerializer(OmitNoneMixin, serializers.Serializer):
    omit_if_none = ("transfer", "section_cohomology")

    label = serializers.CharField()
    backend = serializers.CharField()
    index = serializers.IntegerField()
    normal = serializers.BooleanField()
    cyclic_quotient = serializers.BooleanField()
    ab_g = AbGroupField()
    ab_u = AbGroupField()
    transfer_map = MatrixField()
    inclusion_map = MatrixField()
    composition_holds = serializers.BooleanField()
    transfer = TransferReportSerializer()
    section_cohomology = SectionCohomologySerializer()


class KernelReportSerializer(serializers.Serializer):
    generator = serializers.CharField()
    kernel = AbGroupField()
    augmentation_image = AbGroupField()
    equal = serializers.BooleanField()
    c1_order = serializers.IntegerField()
    verdict = serializers.CharField()


class CyclicSectionReportSerializer(serializers.Serializer):
    derived_order = serializers.IntegerField()
    product_set_order = serializers.IntegerField()
    section_commutators = serializers.IntegerField()
    derived_n_order = serializers.IntegerField()
    generated_order = serializers.IntegerField()
    product_set_equal = serializers.BooleanField()
    generated_equal = serializers.BooleanField()
    verdict = serializers.CharField()


class OrderReportSerializer(serializers.Serializer):
    tk_order = serializers.IntegerField()
    tc_order = serializers.IntegerField()
    index = serializers.IntegerField()
    holds = serializers.BooleanField()
    euler_is_one = serializers.BooleanField()
    suzuki_divides = serializers.BooleanField()
    finite = serializers.BooleanField()
    verdict = serializers.CharField()


class DivisibilityReportSerializer(serializers.Serializer):
    tk_order = serializers.IntegerField()
    index = serializers.IntegerField()
    cyclic_quotient = serializers.BooleanField()
    divides = serializers.BooleanField()
    verdict = serializers.CharField()


class ConsistencyReportSerializer(serializers.Serializer):
    composition_holds = serializers.BooleanField()
    transversals_tried = serializers.IntegerField()
    transversal_independent = serializers.BooleanField()


class RankReportSerializer(serializers.Serializer):
    p = serializers.IntegerField()
    tf_g = serializers.IntegerField()
    tf_u = serializers.IntegerField()
    ratio = FractionField(allow_null=True)
    log_ratio = serializers.IntegerField(allow_null=True)
    herbrand = FractionField(allow_null=True)
    normal = serializers.BooleanField()
    formula_holds = serializers.BooleanField()
    herbrand_holds = serializers.BooleanField()
    verdict = serializers.CharField()


class LatticeDecompositionSerializer(serializers.Serializer):
    p = serializers.IntegerField()
    r = serializers.IntegerField()
    s = serializers.IntegerField()
    t = serializers.IntegerField()
    rank = serializers.IntegerField()
    invariant_rank = serializers.IntegerField()
    log_herbrand = serializers.IntegerField()


class PermutationModuleReportSerializer(serializers.Serializer):
    abelianizations = serializers.ListField(child=AbGroupField())
    section_hm1 = serializers.ListField(child=AbGroupField())
    decomposition = LatticeDecompositionSerializer(allow_null=True)
    hypothesis_holds = serializers.BooleanField()
    verdict = serializers.CharField()


class DatumValidationSerializer(serializers.Serializer):
    violated = serializers.ListField(child=serializers.CharField())
    is_valid = serializers.BooleanField()
    verdict = serializers.CharField()


class ExactnessReportSerializer(serializers.Serializer):
    groups = serializers.DictField(child=AbGroupField())
    exact_at = serializers.DictField(child=serializers.BooleanField())
    exact = serializers.BooleanField()
    verdict = serializers.CharField()


class Hilbert90ReportSerializer(serializers.Serializer):
    c0_order = serializers.IntegerField()
    c0_cyclic = serializers.BooleanField()
    c1_order = serializers.IntegerField()
    index = serializers.IntegerField()
    verdict = serializers.CharField()


class EulerReportSerializer(serializers.Serializer):
    euler = FractionField()
    ratio = FractionField()
    index = serializers.IntegerField()
    finite = serializers.BooleanField()
    verdict = serializers.CharField()


class HerbrandRecordSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    rank = serializers.IntegerField()
    invariant_rank = serializers.IntegerField()
    h0 = AbGroupField()
    hm1 = AbGroupField()
    herbrand = FractionField()


class LoghReportSerializer(serializers.Serializer):
    p = serializers.IntegerField()
    rank = serializers.IntegerField()
    invariant_rank = serializers.IntegerField()
    herbrand = FractionField()
    log_h = serializers.IntegerField()
    torsion_herbrand = FractionField()
    verdict = serializers.CharField()


class SectionRankSerializer(serializers.Serializer):
    label = serializers.CharField()
    p = serializers.IntegerField()
    ratio = FractionField()
    value = serializers.IntegerField(allow_null=True)
    tk_tc_trivial = serializers.BooleanField()


class GtfReportSerializer(serializers.Serializer):
    sections = SectionRankSerializer(many=True)
    agree = serializers.BooleanField()
    verdict = serializers.CharField()


class ItemSerializer(OmitNoneMixin, serializers.Serializer):
    omit_if_none = ("report", "error")

    label = serializers.CharField()
    check = serializers.CharField()
    verdict = serializers.CharField()
    report = serializers.DictField(allow_null=True)
    error = serializers.CharField(allow_null=True)


class RunReportSerializer(OmitNoneMixin, serializers.Serializer):
    omit_if_none = ("error",)

    tool_version = serializers.CharField()
    command = serializers.CharField()
    suite = serializers.CharField(allow_blank=True)
    catalog = serializers.CharField(allow_blank=True)
    summary = serializers.DictField(child=serializers.IntegerField())
    items = ItemSerializer(many=True)
    error = serializers.CharField(allow_null=True)
    wall_time = serializers.DurationField()


class CatalogEntrySerializer(serializers.Serializer):
    name = serializers.CharField()
    backend = serializers.CharField()
    group = serializers.SerializerMethodField()
    subgroups = serializers.SerializerMethodField()
    provenance = serializers.CharField(allow_blank=True)

    def get_group(self, entry) -> str:
        if entry.is_finite:
            return f"permutations of degree {entry.group.degree}, order {entry.group.order}"
        return str(entry.group)

    def get_subgroups(self, entry) -> list[str]:
        return [spec.label for spec in entry.subgroups]
