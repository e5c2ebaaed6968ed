"""Plain-text tables and key-value reports."""

from .tables import (betti_frame, betti_report_text, betti_table_text, certificate_text,
                     complex_text, key_value_report, replay_text)

__all__ = ['betti_frame', 'betti_report_text', 'betti_table_text', 'certificate_text',
           'complex_text', 'key_value_report', 'replay_text']
