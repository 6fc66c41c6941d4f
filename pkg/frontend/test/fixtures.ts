// Captured from the running service and CLI against the committed bundle.
// Regenerate with scripts/make_ui_fixtures.py after retraining.
export const fixtures = {
  "100110010": {
    "api": {
      "dataset_version": "table2-2026.08",
      "bundle_seed": 302,
      "features": [
        1,
        0,
        0,
        1,
        1,
        0,
        0,
        1,
        0
      ],
      "verdicts": [
        {
          "area": "smart_cities",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "key_value",
              "present": false
            },
            {
              "feature": "partition_tolerant",
              "present": false
            },
            {
              "feature": "graph",
              "present": false
            },
            {
              "feature": "consistent",
              "present": true
            },
            {
              "feature": "free",
              "present": true
            }
          ],
          "leaf_counts": {
            "NotSuitable": 2,
            "Suitable": 0
          }
        },
        {
          "area": "social_network_analysis",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "partition_tolerant",
              "present": false
            }
          ],
          "leaf_counts": {
            "NotSuitable": 17,
            "Suitable": 0
          }
        },
        {
          "area": "geospatial",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "document_oriented",
              "present": true
            },
            {
              "feature": "available",
              "present": false
            },
            {
              "feature": "graph",
              "present": false
            },
            {
              "feature": "key_value",
              "present": false
            },
            {
              "feature": "partition_tolerant",
              "present": false
            }
          ],
          "leaf_counts": {
            "NotSuitable": 1,
            "Suitable": 0
          }
        },
        {
          "area": "life_sciences",
          "verdict": "Suitable",
          "path": [
            {
              "feature": "wide_column",
              "present": true
            },
            {
              "feature": "consistent",
              "present": true
            },
            {
              "feature": "free",
              "present": true
            }
          ],
          "leaf_counts": {
            "NotSuitable": 0,
            "Suitable": 1
          }
        },
        {
          "area": "healthcare",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "consistent",
              "present": true
            },
            {
              "feature": "document_oriented",
              "present": true
            },
            {
              "feature": "key_value",
              "present": false
            },
            {
              "feature": "available",
              "present": false
            }
          ],
          "leaf_counts": {
            "NotSuitable": 4,
            "Suitable": 0
          }
        },
        {
          "area": "business_intelligence",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "free",
              "present": true
            },
            {
              "feature": "consistent",
              "present": true
            }
          ],
          "leaf_counts": {
            "NotSuitable": 19,
            "Suitable": 0
          }
        }
      ]
    },
    "cli": {
      "features": [
        1,
        0,
        0,
        1,
        1,
        0,
        0,
        1,
        0
      ],
      "verdicts": [
        {
          "area": "smart_cities",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "key_value",
              "present": false
            },
            {
              "feature": "partition_tolerant",
              "present": false
            },
            {
              "feature": "graph",
              "present": false
            },
            {
              "feature": "consistent",
              "present": true
            },
            {
              "feature": "free",
              "present": true
            }
          ],
          "leaf_counts": [
            2,
            0
          ]
        },
        {
          "area": "social_network_analysis",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "partition_tolerant",
              "present": false
            }
          ],
          "leaf_counts": [
            17,
            0
          ]
        },
        {
          "area": "geospatial",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "document_oriented",
              "present": true
            },
            {
              "feature": "available",
              "present": false
            },
            {
              "feature": "graph",
              "present": false
            },
            {
              "feature": "key_value",
              "present": false
            },
            {
              "feature": "partition_tolerant",
              "present": false
            }
          ],
          "leaf_counts": [
            1,
            0
          ]
        },
        {
          "area": "life_sciences",
          "verdict": "Suitable",
          "path": [
            {
              "feature": "wide_column",
              "present": true
            },
            {
              "feature": "consistent",
              "present": true
            },
            {
              "feature": "free",
              "present": true
            }
          ],
          "leaf_counts": [
            0,
            1
          ]
        },
        {
          "area": "healthcare",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "consistent",
              "present": true
            },
            {
              "feature": "document_oriented",
              "present": true
            },
            {
              "feature": "key_value",
              "present": false
            },
            {
              "feature": "available",
              "present": false
            }
          ],
          "leaf_counts": [
            4,
            0
          ]
        },
        {
          "area": "business_intelligence",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "free",
              "present": true
            },
            {
              "feature": "consistent",
              "present": true
            }
          ],
          "leaf_counts": [
            19,
            0
          ]
        }
      ]
    }
  },
  "110110010": {
    "api": {
      "dataset_version": "table2-2026.08",
      "bundle_seed": 302,
      "features": [
        1,
        1,
        0,
        1,
        1,
        0,
        0,
        1,
        0
      ],
      "verdicts": [
        {
          "area": "smart_cities",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "key_value",
              "present": false
            },
            {
              "feature": "partition_tolerant",
              "present": false
            },
            {
              "feature": "graph",
              "present": true
            }
          ],
          "leaf_counts": {
            "NotSuitable": 2,
            "Suitable": 0
          }
        },
        {
          "area": "social_network_analysis",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "partition_tolerant",
              "present": false
            }
          ],
          "leaf_counts": {
            "NotSuitable": 17,
            "Suitable": 0
          }
        },
        {
          "area": "geospatial",
          "verdict": "Suitable",
          "path": [
            {
              "feature": "document_oriented",
              "present": true
            },
            {
              "feature": "available",
              "present": false
            },
            {
              "feature": "graph",
              "present": true
            }
          ],
          "leaf_counts": {
            "NotSuitable": 0,
            "Suitable": 2
          }
        },
        {
          "area": "life_sciences",
          "verdict": "Suitable",
          "path": [
            {
              "feature": "wide_column",
              "present": true
            },
            {
              "feature": "consistent",
              "present": true
            },
            {
              "feature": "free",
              "present": true
            }
          ],
          "leaf_counts": {
            "NotSuitable": 0,
            "Suitable": 1
          }
        },
        {
          "area": "healthcare",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "consistent",
              "present": true
            },
            {
              "feature": "document_oriented",
              "present": true
            },
            {
              "feature": "key_value",
              "present": false
            },
            {
              "feature": "available",
              "present": false
            }
          ],
          "leaf_counts": {
            "NotSuitable": 4,
            "Suitable": 0
          }
        },
        {
          "area": "business_intelligence",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "free",
              "present": true
            },
            {
              "feature": "consistent",
              "present": true
            }
          ],
          "leaf_counts": {
            "NotSuitable": 19,
            "Suitable": 0
          }
        }
      ]
    },
    "cli": {
      "features": [
        1,
        1,
        0,
        1,
        1,
        0,
        0,
        1,
        0
      ],
      "verdicts": [
        {
          "area": "smart_cities",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "key_value",
              "present": false
            },
            {
              "feature": "partition_tolerant",
              "present": false
            },
            {
              "feature": "graph",
              "present": true
            }
          ],
          "leaf_counts": [
            2,
            0
          ]
        },
        {
          "area": "social_network_analysis",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "partition_tolerant",
              "present": false
            }
          ],
          "leaf_counts": [
            17,
            0
          ]
        },
        {
          "area": "geospatial",
          "verdict": "Suitable",
          "path": [
            {
              "feature": "document_oriented",
              "present": true
            },
            {
              "feature": "available",
              "present": false
            },
            {
              "feature": "graph",
              "present": true
            }
          ],
          "leaf_counts": [
            0,
            2
          ]
        },
        {
          "area": "life_sciences",
          "verdict": "Suitable",
          "path": [
            {
              "feature": "wide_column",
              "present": true
            },
            {
              "feature": "consistent",
              "present": true
            },
            {
              "feature": "free",
              "present": true
            }
          ],
          "leaf_counts": [
            0,
            1
          ]
        },
        {
          "area": "healthcare",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "consistent",
              "present": true
            },
            {
              "feature": "document_oriented",
              "present": true
            },
            {
              "feature": "key_value",
              "present": false
            },
            {
              "feature": "available",
              "present": false
            }
          ],
          "leaf_counts": [
            4,
            0
          ]
        },
        {
          "area": "business_intelligence",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "free",
              "present": true
            },
            {
              "feature": "consistent",
              "present": true
            }
          ],
          "leaf_counts": [
            19,
            0
          ]
        }
      ]
    }
  },
  "000000000": {
    "api": {
      "dataset_version": "table2-2026.08",
      "bundle_seed": 302,
      "features": [
        0,
        0,
        0,
        0,
        0,
        0,
        0,
        0,
        0
      ],
      "verdicts": [
        {
          "area": "smart_cities",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "key_value",
              "present": false
            },
            {
              "feature": "partition_tolerant",
              "present": false
            },
            {
              "feature": "graph",
              "present": false
            },
            {
              "feature": "consistent",
              "present": false
            }
          ],
          "leaf_counts": {
            "NotSuitable": 2,
            "Suitable": 0
          }
        },
        {
          "area": "social_network_analysis",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "partition_tolerant",
              "present": false
            }
          ],
          "leaf_counts": {
            "NotSuitable": 17,
            "Suitable": 0
          }
        },
        {
          "area": "geospatial",
          "verdict": "Suitable",
          "path": [
            {
              "feature": "document_oriented",
              "present": false
            },
            {
              "feature": "consistent",
              "present": false
            },
            {
              "feature": "key_value",
              "present": false
            },
            {
              "feature": "graph",
              "present": false
            },
            {
              "feature": "free",
              "present": false
            }
          ],
          "leaf_counts": {
            "NotSuitable": 0,
            "Suitable": 1
          }
        },
        {
          "area": "life_sciences",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "wide_column",
              "present": false
            },
            {
              "feature": "document_oriented",
              "present": false
            },
            {
              "feature": "partition_tolerant",
              "present": false
            },
            {
              "feature": "free",
              "present": false
            }
          ],
          "leaf_counts": {
            "NotSuitable": 5,
            "Suitable": 0
          }
        },
        {
          "area": "healthcare",
          "verdict": "Suitable",
          "path": [
            {
              "feature": "consistent",
              "present": false
            },
            {
              "feature": "partition_tolerant",
              "present": false
            }
          ],
          "leaf_counts": {
            "NotSuitable": 0,
            "Suitable": 3
          }
        },
        {
          "area": "business_intelligence",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "free",
              "present": false
            },
            {
              "feature": "document_oriented",
              "present": false
            },
            {
              "feature": "partition_tolerant",
              "present": false
            },
            {
              "feature": "graph",
              "present": false
            },
            {
              "feature": "available",
              "present": false
            }
          ],
          "leaf_counts": {
            "NotSuitable": 1,
            "Suitable": 0
          }
        }
      ]
    },
    "cli": {
      "features": [
        0,
        0,
        0,
        0,
        0,
        0,
        0,
        0,
        0
      ],
      "verdicts": [
        {
          "area": "smart_cities",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "key_value",
              "present": false
            },
            {
              "feature": "partition_tolerant",
              "present": false
            },
            {
              "feature": "graph",
              "present": false
            },
            {
              "feature": "consistent",
              "present": false
            }
          ],
          "leaf_counts": [
            2,
            0
          ]
        },
        {
          "area": "social_network_analysis",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "partition_tolerant",
              "present": false
            }
          ],
          "leaf_counts": [
            17,
            0
          ]
        },
        {
          "area": "geospatial",
          "verdict": "Suitable",
          "path": [
            {
              "feature": "document_oriented",
              "present": false
            },
            {
              "feature": "consistent",
              "present": false
            },
            {
              "feature": "key_value",
              "present": false
            },
            {
              "feature": "graph",
              "present": false
            },
            {
              "feature": "free",
              "present": false
            }
          ],
          "leaf_counts": [
            0,
            1
          ]
        },
        {
          "area": "life_sciences",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "wide_column",
              "present": false
            },
            {
              "feature": "document_oriented",
              "present": false
            },
            {
              "feature": "partition_tolerant",
              "present": false
            },
            {
              "feature": "free",
              "present": false
            }
          ],
          "leaf_counts": [
            5,
            0
          ]
        },
        {
          "area": "healthcare",
          "verdict": "Suitable",
          "path": [
            {
              "feature": "consistent",
              "present": false
            },
            {
              "feature": "partition_tolerant",
              "present": false
            }
          ],
          "leaf_counts": [
            0,
            3
          ]
        },
        {
          "area": "business_intelligence",
          "verdict": "NotSuitable",
          "path": [
            {
              "feature": "free",
              "present": false
            },
            {
              "feature": "document_oriented",
              "present": false
            },
            {
              "feature": "partition_tolerant",
              "present": false
            },
            {
              "feature": "graph",
              "present": false
            },
            {
              "feature": "available",
              "present": false
            }
          ],
          "leaf_counts": [
            1,
            0
          ]
        }
      ]
    }
  },
  "importance_healthcare": {
    "dataset_version": "table2-2026.08",
    "bundle_seed": 302,
    "area": "healthcare",
    "feature_names": [
      "document_oriented",
      "graph",
      "key_value",
      "wide_column",
      "consistent",
      "available",
      "partition_tolerant",
      "free",
      "proprietary"
    ],
    "importance": [
      0.1533190638746616,
      0.13575924779282722,
      0.12311012710192092,
      0.025523514985342336,
      0.20977175204106288,
      0.08103024080247857,
      0.16307133289146902,
      0.06926178256765404,
      0.039152937942583246
    ]
  },
  "tree_geospatial": {
    "dataset_version": "table2-2026.08",
    "bundle_seed": 302,
    "area": "geospatial",
    "accuracy": 0.8,
    "tree": {
      "format_version": 1,
      "area": "geospatial",
      "seed": 302,
      "params": {
        "max_depth": 9,
        "min_samples_leaf": 1
      },
      "root": {
        "feature": 0,
        "absent": {
          "feature": 4,
          "absent": {
            "feature": 2,
            "absent": {
              "feature": 1,
              "absent": {
                "feature": 7,
                "absent": {
                  "label": "Suitable",
                  "counts": [
                    0,
                    1
                  ]
                },
                "present": {
                  "label": "NotSuitable",
                  "counts": [
                    1,
                    0
                  ]
                },
                "samples": 2,
                "decrease": 0.5
              },
              "present": {
                "feature": 7,
                "absent": {
                  "label": "NotSuitable",
                  "counts": [
                    1,
                    0
                  ]
                },
                "present": {
                  "label": "NotSuitable",
                  "counts": [
                    2,
                    1
                  ]
                },
                "samples": 4,
                "decrease": 0.04166666666666663
              },
              "samples": 6,
              "decrease": 0.02777777777777779
            },
            "present": {
              "label": "NotSuitable",
              "counts": [
                7,
                0
              ]
            },
            "samples": 13,
            "decrease": 0.055226824457593665
          },
          "present": {
            "label": "NotSuitable",
            "counts": [
              27,
              0
            ]
          },
          "samples": 40,
          "decrease": 0.010384615384615409
        },
        "present": {
          "feature": 5,
          "absent": {
            "feature": 1,
            "absent": {
              "feature": 2,
              "absent": {
                "feature": 6,
                "absent": {
                  "label": "NotSuitable",
                  "counts": [
                    1,
                    0
                  ]
                },
                "present": {
                  "label": "Suitable",
                  "counts": [
                    0,
                    2
                  ]
                },
                "samples": 3,
                "decrease": 0.4444444444444444
              },
              "present": {
                "label": "NotSuitable",
                "counts": [
                  2,
                  0
                ]
              },
              "samples": 5,
              "decrease": 0.21333333333333332
            },
            "present": {
              "label": "Suitable",
              "counts": [
                0,
                2
              ]
            },
            "samples": 7,
            "decrease": 0.14693877551020412
          },
          "present": {
            "label": "NotSuitable",
            "counts": [
              13,
              0
            ]
          },
          "samples": 20,
          "decrease": 0.1485714285714284
        },
        "samples": 60,
        "decrease": 0.009999999999999981
      }
    }
  },
  "spearman": {
    "dataset_version": "table2-2026.08",
    "bundle_seed": 302,
    "kind": "spearman_rho",
    "feature_names": [
      "document_oriented",
      "graph",
      "key_value",
      "wide_column",
      "consistent",
      "available",
      "partition_tolerant",
      "free",
      "proprietary"
    ],
    "values": [
      [
        1.0,
        -0.06284697584427718,
        -0.49580915538362347,
        -0.2594750658969167,
        0.14772943634561617,
        0.10365963290173984,
        -0.2825885947784643,
        -0.05008069294868259,
        0.028791635517399605
      ],
      [
        -0.06284697584427718,
        1.0,
        -0.31113132485870554,
        -0.16085767081103686,
        0.03425082218250598,
        -0.053234843331076684,
        0.14002800840280097,
        -0.2333424928276553,
        0.21943699408049175
      ],
      [
        -0.49580915538362347,
        -0.31113132485870554,
        1.0,
        -0.2594750658969167,
        0.03930416196351256,
        -0.05480095242576055,
        0.04986857554914076,
        0.20674337345481786,
        -0.17594888371744202
      ],
      [
        -0.2594750658969167,
        -0.16085767081103686,
        -0.2594750658969167,
        1.0,
        -0.06847530724696556,
        -0.13458334698733598,
        0.20272121351984576,
        -0.0022371812521687373,
        -0.005573387961720503
      ],
      [
        0.14772943634561617,
        0.03425082218250598,
        0.03930416196351256,
        -0.06847530724696556,
        1.0,
        -0.5232433348921682,
        -0.2795426231258449,
        -0.056686201706983776,
        0.07397225399285363
      ],
      [
        0.10365963290173984,
        -0.053234843331076684,
        -0.05480095242576055,
        -0.13458334698733598,
        -0.5232433348921682,
        1.0,
        -0.38017282355357584,
        0.08810536140783243,
        -0.12121248708414585
      ],
      [
        -0.2825885947784643,
        0.14002800840280097,
        0.04986857554914076,
        0.20272121351984576,
        -0.2795426231258449,
        -0.38017282355357584,
        1.0,
        0.15450054282205716,
        -0.13746434980705374
      ],
      [
        -0.05008069294868259,
        -0.2333424928276553,
        0.20674337345481786,
        -0.0022371812521687373,
        -0.056686201706983776,
        0.08810536140783243,
        0.15450054282205716,
        1.0,
        -0.9748387348716767
      ],
      [
        0.028791635517399605,
        0.21943699408049175,
        -0.17594888371744202,
        -0.005573387961720503,
        0.07397225399285363,
        -0.12121248708414585,
        -0.13746434980705374,
        -0.9748387348716767,
        1.0
      ]
    ]
  }
} as const;
