import io
import logging

from src.utils.logging_config import setup_logging, get_logger, DebugCategory, CategoryFilter, LogLevel


def make_record(category=None):
    record = logging.LogRecord("src.test", logging.DEBUG, __file__, 1, "message", None, None)
    if category is not None:
        record.category = category
    return record


def test_filter_without_categories_passes_everything():
    """Test that an empty filter passes records and tags them"""
    record = make_record()
    assert CategoryFilter().filter(record)
    assert record.category == "general"


def test_filter_selects_categories():
    """Test that only the requested categories pass"""
    category_filter = CategoryFilter([DebugCategory.SEARCH])
    assert category_filter.filter(make_record("search"))
    assert not category_filter.filter(make_record("graph"))


def test_default_level_is_warning():
    stream = io.StringIO()
    setup_logging(stream=stream)
    logger = get_logger("src.test")
    logger.info("quiet", extra={"category": DebugCategory.CLI.value})
    logger.warning("loud", extra={"category": DebugCategory.CLI.value})
    assert "quiet" not in stream.getvalue()
    assert "[cli] - WARNING - loud" in stream.getvalue()


def test_debug_categories_enable_debug():
    stream = io.StringIO()
    setup_logging([DebugCategory.BANDED], stream=stream)
    logger = get_logger("src.test")
    logger.debug("band", extra={"category": DebugCategory.BANDED.value})
    logger.debug("graph", extra={"category": DebugCategory.GRAPH.value})
    assert "band" in stream.getvalue()
    assert "graph" not in stream.getvalue()


def test_repeated_setup_replaces_handlers():
    """Test that handlers do not pile up across calls"""
    first, second = io.StringIO(), io.StringIO()
    setup_logging(stream=first, level=LogLevel.INFO)
    setup_logging(stream=second, level=LogLevel.INFO)
    get_logger("src.test").info("once")
    assert first.getvalue() == ""
    assert "once" in second.getvalue()


def test_log_file(tmp_path):
    log_file = tmp_path / "mmatrix.log"
    setup_logging(log_file=str(log_file), stream=io.StringIO())
    get_logger("src.test").error("written", extra={"category": DebugCategory.CLI.value})
    setup_logging()
    assert "written" in log_file.read_text()
