"""OpenTelemetry tracing configuration"""
from typing import Optional

import structlog
from opentelemetry import trace
from opentelemetry.sdk.resources import SERVICE_NAME, Resource
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import BatchSpanProcessor

logger = structlog.get_logger()

_configured = False


def setup_tracing(service_name: str = "fedder-dp1", otlp_endpoint: Optional[str] = None) -> None:
    """
    Install a tracer provider for the census and classification spans.

    Args:
        service_name: Name of the service for tracing
        otlp_endpoint: OTLP endpoint (e.g., "http://localhost:4317"); spans stay local without one
    """
    global _configured
    if _configured:
        return
    logger.debug("setting_up_tracing", service_name=service_name, endpoint=otlp_endpoint)

    provider = TracerProvider(resource=Resource(attributes={SERVICE_NAME: service_name}))

    if otlp_endpoint:
        try:
            from opentelemetry.exporter.otlp.proto.grpc.trace_exporter import OTLPSpanExporter

            provider.add_span_processor(
                BatchSpanProcessor(OTLPSpanExporter(endpoint=otlp_endpoint, insecure=True))
            )
            logger.info("otlp_exporter_configured", endpoint=otlp_endpoint)
        except Exception as e:
            logger.warning("failed_to_configure_otlp", error=str(e))

    trace.set_tracer_provider(provider)
    _configured = True
    logger.debug("tracing_configured")


def get_tracer(name: str = __name__) -> trace.Tracer:
    """Get a tracer instance"""
    return trace.get_tracer(name)
