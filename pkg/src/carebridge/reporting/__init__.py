from .analytics import (
    GlucoseTrend,
    LexiconSentimentClassifier,
    Period,
    SentimentSummary,
    glucose_trend,
    sentiment_summary,
    symptom_frequency,
)
from .monthly import MonthlyReport, build_monthly_report, organize_record, serialize_report
from .feedback import FeedbackAggregate, InteractionEvent, aggregate_feedback

__all__ = [
    "GlucoseTrend",
    "LexiconSentimentClassifier",
    "Period",
    "SentimentSummary",
    "glucose_trend",
    "sentiment_summary",
    "symptom_frequency",
    "MonthlyReport",
    "build_monthly_report",
    "organize_record",
    "serialize_report",
    "FeedbackAggregate",
    "InteractionEvent",
    "aggregate_feedback",
]
