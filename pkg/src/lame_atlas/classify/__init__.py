"""Catalog ingestion, amalgam quotient search and the appendix group-theory checks."""

from .catalog import (
    CATALOG_ENV,
    EXPECTED_COUNTS,
    Catalog,
    CatalogIntegrityError,
    CatalogParseError,
    CatalogRecord,
    default_catalog_path,
    load_catalog,
)
from .quotients import (
    ClassificationReport,
    QuotientWitness,
    ReportEntry,
    classify_all,
    find_quotients,
    iso_type,
    reference_groups,
    standard_amalgams,
)
from .appendix import (
    AppendixReport,
    Check,
    configuration,
    configuration_witnesses,
    verify_appendix_A1,
    verify_appendix_A2,
    verify_appendix_lemmas,
)
