import pytest
from toric_pseudoindex import catalogUtils as cat
from toric_pseudoindex.exceptions import ToricError

SMALL = cat.CatalogLimits(m_max=3, max_param=2, n_max=4)


def test_limits_from_text():
	assert cat.CatalogLimits.from_text("3,2,4") == SMALL
	with pytest.raises(ValueError):
		cat.CatalogLimits.from_text("3,2")


@pytest.mark.parametrize("kwargs", [
	{"max_entries": 0},
	{"max_entries": -1},
	{"m_max": -1},
	{"max_param": -2},
	{"n_max": -3},
])
def test_limits_rejected(kwargs):
	with pytest.raises(ToricError):
		cat.CatalogLimits(**kwargs)


def test_limits_from_text_rejects_negative():
	with pytest.raises(ToricError):
		cat.CatalogLimits.from_text("3,-1,4")


def test_default_limits():
	limits = cat.CatalogLimits()
	assert (limits.m_max, limits.max_param, limits.n_max, limits.max_entries) == (8, 6, 8, None)
	assert len(cat.family_tasks(limits.max_param)) == 1080


@pytest.mark.parametrize("limits, expected", [
	(SMALL, 2 + 8 + 6),
	(cat.CatalogLimits(m_max=5, max_param=4, n_max=6), 4 + 192 + 15),
])
def test_task_count(limits, expected):
	tasks = cat.catalog_tasks(limits)
	labels = [t.label for t in tasks]
	assert len(tasks) == expected
	assert labels == sorted(set(labels))


def test_make_task():
	task = cat.make_task("family", a=5, d=1, r=4, s=2)
	assert task.label == "family/a=05,d=01,r=04,s=02"
	assert dict(task.params) == {"a": 5, "d": 1, "r": 4, "s": 2}


def test_build_catalog():
	catalog = cat.build_catalog(SMALL)
	assert len(catalog.entries) == 16
	assert not catalog.truncated
	assert [e.label for e in catalog.entries] == [t.label for t in cat.catalog_tasks(SMALL)]
	assert all(e.identities.ok for e in catalog.entries)
	assert len(catalog.of_kind("prop1")) == 2
	assert len(catalog.of_kind("linear")) == 6


def test_linear_point_of_p3_entry():
	entry = cat.build_entry(cat.make_task("linear", n=3, k=0))
	assert entry.both_fano
	assert entry.report_x.pseudo_index == 2
	assert entry.dim_z == 0
	assert entry.validated is None


def test_build_entry_with_validation():
	entry = cat.build_entry(cat.make_task("prop1", m=2), validate=True)
	assert entry.validated is True
	assert entry.to_dict()["validated"] is True


def test_entry_to_dict():
	entry = cat.build_entry(cat.make_task("family", a=5, d=1, r=4, s=2))
	d = entry.to_dict()
	assert d["params"] == {"a": 5, "d": 1, "r": 4, "s": 2}
	assert (d["n"], d["dim_z"]) == (10, 6)
	assert d["report_y"]["pseudo_index"] == 2
	assert d["report_x"]["pseudo_index"] == 3
	assert d["theorem_flags"]["applied"] == "none"


def test_truncated_catalog():
	catalog = cat.build_catalog(cat.CatalogLimits(m_max=3, max_param=2, n_max=4, max_entries=5))
	assert catalog.truncated
	assert len(catalog.entries) == 5


def test_catalog_is_deterministic():
	first = [e.to_dict() for e in cat.build_catalog(SMALL).entries]
	second = [e.to_dict() for e in cat.build_catalog(SMALL).entries]
	assert first == second


def test_workers_give_the_same_catalog():
	limits = cat.CatalogLimits(m_max=2, max_param=2, n_max=3)
	serial = cat.build_catalog(limits)
	parallel = cat.build_catalog(limits, workers=2)
	assert [e.to_dict() for e in serial.entries] == [e.to_dict() for e in parallel.entries]
