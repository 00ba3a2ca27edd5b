import time

from src.utils.metrics import Metrics


def test_metrics_initialization():
    """Test metrics initialization with empty dictionaries"""
    metrics = Metrics()
    assert metrics.phase_seconds == {}
    assert metrics.counters == {}


def test_record_duration():
    """Test that durations accumulate per phase"""
    metrics = Metrics()
    metrics.record_duration("hunt", 0.5)
    metrics.record_duration("hunt", 0.25)
    assert metrics.phase_seconds["hunt"] == 0.75


def test_increment():
    """Test counters"""
    metrics = Metrics()
    metrics.increment("examined")
    metrics.increment("examined", 4)
    assert metrics.counters["examined"] == 5


def test_phase_timing():
    """Test start/end timing of a phase"""
    metrics = Metrics()
    metrics.start_phase("hunt")
    time.sleep(0.01)
    metrics.end_phase("hunt")
    assert metrics.phase_seconds["hunt"] > 0
    metrics.end_phase("never-started")
    assert "never-started" not in metrics.phase_seconds


def test_get_metrics():
    """Test getting all metrics"""
    metrics = Metrics()
    metrics.record_duration("classify", 0.5)
    metrics.increment("filtered_in")
    snapshot = metrics.get_metrics()
    assert snapshot == {"phase_seconds": {"classify": 0.5}, "counters": {"filtered_in": 1}}
    snapshot["counters"]["filtered_in"] = 99
    assert metrics.counters["filtered_in"] == 1
