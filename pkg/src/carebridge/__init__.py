"""Carebridge: a diabetes care companion platform.

Library entry points live in the subpackages:

- ``carebridge.knowledge``: medical term graph, text matching, hybrid retrieval
- ``carebridge.dialogue``: adaptive assessment and the Q&A pipeline
- ``carebridge.transcripts``: consultation sessions and streaming annotation
- ``carebridge.records``: health record streams, reminders, care-mode rules
- ``carebridge.access``: patient-managed grants and alert routing
- ``carebridge.reporting``: monthly analytics and the feedback aggregate
- ``carebridge.service``: HTTP/WebSocket surface, stores, config, auth
- ``carebridge.evalstats``: study statistics (scoring, t-test, U test, SUS)
"""

__version__ = "0.1.0"
