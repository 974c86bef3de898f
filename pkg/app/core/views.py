from drf_spectacular.utils import OpenApiParameter, extend_schema, extend_schema_view
from rest_framework import permissions, viewsets
from rest_framework.decorators import api_view
from rest_framework.response import Response

from cli import __version__
from core import models, serializers


@api_view(["GET"])
def health_check(request):
    return Response({"status": "ok", "version": __version__})


@extend_schema_view(
    list=extend_schema(
        parameters=[
            OpenApiParameter(name="suite", type=str, description="Only runs of this suite"),
            OpenApiParameter(
                name="catalog", type=str, description="Only runs over this catalog"
            ),
            OpenApiParameter(
                "failed_only",
                int,
                enum=[0, 1],
                description="Only runs with at least one failed check.",
            ),
        ]
    )
)
class RunRecordViewSet(viewsets.ReadOnlyModelViewSet):
    """Saved verification runs"""

    serializer_class = serializers.RunRecordDetailSerializer
    queryset = models.RunRecord.objects.all()
    permission_classes = [permissions.IsAuthenticated]

    def get_queryset(self):
        qs = self.queryset
        for field in ("suite", "catalog"):
            value = self.request.query_params.get(field)
            if value:
                qs = qs.filter(**{field: value})

        failed_only = bool(int(self.request.query_params.get("failed_only", 0)))
        if failed_only:
            qs = qs.filter(failed__gt=0)

        return qs.order_by("-created", "-id")

    def get_serializer_class(self):
        """Return appropriate serializer class"""
        if self.action == "list":
            return serializers.RunRecordSerializer

        return self.serializer_class
