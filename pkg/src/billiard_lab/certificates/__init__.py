"""回転・シアー語と非恒等証明書モジュール"""

from .certify import (
    certify_not_identity,
    dump_word,
    identity_family,
    load_word,
    orbit_word,
    parse_word,
    quasi_direction,
    render_report,
    save_word,
    track_halfline,
    winding_sum_check,
    word_product,
)
from .exceptions import CertificateError, WordFileError
from .schemas import (
    Certificate,
    QuasiDirectionStep,
    QuasiDirectionTrace,
    ShearRotationWord,
    Stage,
    Verdict,
)

__all__ = [
    "word_product",
    "identity_family",
    "quasi_direction",
    "track_halfline",
    "certify_not_identity",
    "winding_sum_check",
    "orbit_word",
    "render_report",
    "dump_word",
    "parse_word",
    "load_word",
    "save_word",
    "ShearRotationWord",
    "QuasiDirectionStep",
    "QuasiDirectionTrace",
    "Certificate",
    "Stage",
    "Verdict",
    "CertificateError",
    "WordFileError",
]
