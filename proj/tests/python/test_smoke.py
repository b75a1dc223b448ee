"""Smoke tests for the Python bindings: one pass over every exposed surface."""

import math

import pytest

import emgpr


def test_module_metadata():
    assert emgpr.NUM_CLASSES == 10
    assert emgpr.__version__
    assert len(emgpr.Dataset.class_names()) == 10


def test_time_domain_features():
    assert emgpr.rms([3.0, 4.0]) == pytest.approx(math.sqrt(12.5))
    assert emgpr.mav([1.0, -2.0, 3.0]) == pytest.approx(2.0)
    assert emgpr.iav([1.0, -2.0, 3.0]) == pytest.approx(6.0)
    assert emgpr.waveform_length([0.0, 1.0, 0.0, 1.0]) == pytest.approx(3.0)
    assert emgpr.zero_crossings([1.0, -1.0, 1.0, -1.0]) == 3
    assert emgpr.zero_crossings([0.2, -0.2], threshold=0.5) == 0
    assert emgpr.slope_sign_changes([0.0, 1.0, 0.0, 1.0, 0.0]) == 3
    assert emgpr.skewness([-1.0, 0.0, 1.0]) == pytest.approx(0.0)

    moments = emgpr.central_moments([-1.0, 1.0], max_order=7)
    assert moments == pytest.approx([0.0, 1.0, 0.0, 1.0, 0.0, 1.0, 0.0])

    fit = emgpr.ar_fit([0.1, -0.2, 0.3, 0.05, -0.15, 0.2, -0.1, 0.25], order=2)
    assert len(fit.coefficients) == 2
    assert fit.noise_variance >= 0.0
    assert all(abs(k) <= 1.0 + 1e-9 for k in fit.reflection)
    with pytest.raises(ArithmeticError):
        emgpr.ar_fit([1.0] * 32, order=2)


def test_recording_and_extract():
    rec = emgpr.Recording(
        subject=0,
        label=3,
        trial=1,
        channel_a=[math.sin(0.3 * i) for i in range(64)],
        channel_b=[math.cos(0.5 * i) for i in range(64)],
    )
    assert len(rec) == 64
    fv = emgpr.extract(rec)
    assert len(fv.values) == 30
    assert fv.label == 3
    assert fv.warnings == []
    assert len(emgpr.feature_names()) == 30

    with pytest.raises(ValueError):
        emgpr.Recording(subject=0, label=3, trial=1, channel_a=[1.0], channel_b=[1.0])


def test_symmetric_eig_and_pca():
    values, vectors = emgpr.symmetric_eig([[2.0, 0.0], [0.0, 1.0]])
    assert values == pytest.approx([2.0, 1.0])
    assert vectors[0] == pytest.approx([1.0, 0.0])

    # Rank-1 cloud: one component carries everything.
    x = [[float(i), 2.0 * i] for i in range(-3, 4)]
    proj = emgpr.pca_fit(x, k=1)
    assert proj.kind == "pca"
    assert proj.explained_ratio == pytest.approx([1.0])
    norm = math.sqrt(sum(c * c for c in proj.components[0]))
    assert norm == pytest.approx(1.0)
    assert len(proj.transform(x)) == len(x)

    curve = emgpr.explained_variance_curve(x)
    assert curve[-1] == pytest.approx(1.0)

    with pytest.raises(ValueError):
        emgpr.pca_fit(x, k=0)


def test_lda_rank_bound():
    x = [[0.0, 0.0], [0.1, -0.1], [5.0, 5.0], [5.1, 4.9]]
    y = [0, 0, 1, 1]
    proj = emgpr.lda_fit(x, y, k=1)
    z = [row[0] for row in proj.transform(x)]
    assert max(z[:2]) < min(z[2:]) or min(z[:2]) > max(z[2:])
    with pytest.raises(ValueError):
        emgpr.lda_fit(x, y, k=2)  # two classes allow only one direction


def test_svm_and_mlp_on_xor():
    x = [[0.0, 0.0], [0.0, 1.0], [1.0, 0.0], [1.0, 1.0]]
    y = [0, 1, 1, 0]

    svm_cfg = emgpr.SVMConfig()
    svm_cfg.kernel = "rbf"
    svm_cfg.gamma = 1.0
    model = emgpr.svm_train(x, y, n_classes=2, config=svm_cfg)
    assert model.predict(x) == y
    assert model.n_classes == 2
    assert model.pairs == [(0, 1)]
    assert model.models[0].decision(x[0]) != 0.0

    mlp_cfg = emgpr.MLPTrainConfig()
    mlp_cfg.hidden_size = 4
    mlp_cfg.epochs = 5000
    mlp_cfg.seed = 3
    result = emgpr.mlp_train(x, y, n_classes=2, config=mlp_cfg)
    assert result.model.predict(x) == y
    assert len(result.loss_curve) == 5001
    proba = result.model.predict_proba(x[0])
    assert sum(proba) == pytest.approx(1.0)


def test_synth_split_and_pipeline():
    ds = emgpr.synth_dataset(subjects=2, trials=2, samples=256, seed=7)
    assert len(ds) == 40
    assert ds.recordings[0].subject_id == 0

    table = emgpr.extract_table(ds)
    assert len(table.x) == 40
    assert len(table.x[0]) == 30
    assert sorted(set(table.labels)) == list(range(10))

    train, test = emgpr.split(ds, n_train=30, n_test=10, seed=7)
    assert len(train) == 30
    assert len(test) == 10

    cfg = emgpr.PipelineConfig()
    cfg.reducer = "pca"
    cfg.k = 5
    cfg.classifier = "ann"
    cfg.mlp.epochs = 40
    cfg.mlp.hidden_size = 8
    cfg.split.n_train = 30
    cfg.split.n_test = 10
    report = emgpr.run_pipeline(ds, cfg)
    assert 0.0 <= report.accuracy <= 1.0
    assert report.n_train == 30
    assert report.n_test == 10
    assert len(report.confusion_raw) == 10
    assert len(report.loss_curve) == 41

    again = emgpr.run_pipeline(ds, cfg)
    assert again.accuracy == report.accuracy

    cfg.classifier = "svm"
    cfg.svm.kernel = "linear"
    svm_report = emgpr.run_pipeline(ds, cfg)
    assert svm_report.loss_curve == []

    sweep = emgpr.sweep_components(ds, ks=[1, 3], config=cfg)
    assert sweep.axis == "components"
    assert [k for k, _ in sweep.points] == [1, 3]

    grid = emgpr.ascii_heatmap(report.confusion_normalized, emgpr.Dataset.class_names())
    assert "HC" in grid


def test_dataset_roundtrip(tmp_path):
    ds = emgpr.synth_dataset(subjects=1, trials=2, samples=64, seed=5)
    emgpr.write_dataset(ds, tmp_path / "data")
    loaded = emgpr.load_dataset(tmp_path / "data")
    assert len(loaded) == len(ds)
    first, second = ds.recordings[0], loaded.recordings[0]
    assert (first.subject_id, first.class_id, first.trial_id) == (
        second.subject_id,
        second.class_id,
        second.trial_id,
    )
    assert first.channel_a == pytest.approx(second.channel_a, abs=1e-9)

    with pytest.raises(emgpr.DataError):
        emgpr.load_dataset(tmp_path / "missing")


def test_confusion_and_accuracy():
    predicted = [0, 1, 1, 2]
    actual = [0, 1, 2, 2]
    assert emgpr.accuracy(predicted, actual) == pytest.approx(0.75)
    result = emgpr.confusion(predicted, actual, n_classes=3)
    assert result.raw[2][1] == 1.0
    assert result.support == [1, 1, 2]
    assert result.empty_classes == []
