from django.urls import include, path
from rest_framework.routers import DefaultRouter

from core import views

router = DefaultRouter()
router.register("runs", views.RunRecordViewSet)

app_name = "core"

urlpatterns = [path("", include(router.urls))]
