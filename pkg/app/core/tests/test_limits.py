from django.conf import settings

from core.limits import algebra_caps, algebra_setting


def test_reads_settings():
    assert algebra_setting("MAX_COSETS") == settings.ALGEBRA["MAX_COSETS"]


def test_caps_apply_inside_the_block_only():
    default = settings.ALGEBRA["MAX_ORDER"]

    with algebra_caps(MAX_ORDER=12, MAX_COSETS=None):
        assert algebra_setting("MAX_ORDER") == 12
        assert algebra_setting("MAX_COSETS") == settings.ALGEBRA["MAX_COSETS"]
        with algebra_caps(MAX_COSETS=7):
            assert (algebra_setting("MAX_ORDER"), algebra_setting("MAX_COSETS")) == (12, 7)

    assert algebra_setting("MAX_ORDER") == default


def test_settings_are_untouched():
    before = dict(settings.ALGEBRA)

    with algebra_caps(MAX_ORDER=1):
        assert settings.ALGEBRA == before
