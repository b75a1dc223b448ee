"""EMG pattern recognition: time-domain features, PCA/LDA, SVM and MLP.

Thin Python surface over the C++ core. The typical flow:

    import emgpr

    ds = emgpr.synth_dataset(subjects=2, trials=2, samples=1000, seed=42)
    cfg = emgpr.PipelineConfig()
    cfg.split.n_train, cfg.split.n_test = 30, 10
    report = emgpr.run_pipeline(ds, cfg)
    print(report.accuracy)
"""

from emgpr._core import (  # noqa: F401
    NUM_CLASSES,
    ARModel,
    ConfusionResult,
    DataError,
    Dataset,
    EvaluationReport,
    FeatureConfig,
    FeatureTable,
    FeatureVector,
    MLPModel,
    MLPTrainConfig,
    MLPTrainResult,
    NumericError,
    PipelineConfig,
    Projector,
    Recording,
    SplitSpec,
    SVMBinary,
    SVMConfig,
    SVMMulticlass,
    SweepResult,
    __version__,
    accuracy,
    ar_fit,
    ascii_heatmap,
    central_moments,
    confusion,
    explained_variance_curve,
    extract,
    extract_table,
    feature_names,
    iav,
    lda_fit,
    load_dataset,
    mav,
    mlp_train,
    pca_fit,
    rms,
    run_pipeline,
    skewness,
    slope_sign_changes,
    split,
    svm_train,
    sweep_components,
    sweep_split,
    symmetric_eig,
    synth_dataset,
    waveform_length,
    write_dataset,
    zero_crossings,
)
