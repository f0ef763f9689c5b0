#!/usr/bin/env python

"""The setup script."""

from setuptools import find_packages, setup

with open("README.md") as readme_file:
    readme = readme_file.read()

with open("HISTORY.rst") as history_file:
    history = history_file.read()

requirements = [
    "numpy>=1.24",
    "pandas>=2.0",
    "scipy>=1.10",
    "tqdm>=4.66",
    "joblib>=1.3",
    "feedparser>=6.0",
    "python-dateutil>=2.8",
]

test_requirements = ["networkx>=3.1"]

setup(
    python_requires=">=3.9",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Developers",
        "License :: OSI Approved :: MIT License",
        "Natural Language :: English",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
    ],
    description="A python package for building and diagnosing tag co-occurrence networks of folksonomies.",
    install_requires=requirements,
    extras_require={"plot": ["matplotlib>=3.7", "seaborn>=0.13"]},
    entry_points={"console_scripts": ["tagnet=tagnet.cli:main"]},
    license="MIT license",
    long_description=readme,  # + "\n\n" + history,
    long_description_content_type="text/markdown",
    include_package_data=True,
    keywords="tagnet",
    name="tagnet",
    packages=find_packages(include=["tagnet", "tagnet.*"]),
    test_suite="tests",
    tests_require=test_requirements,
    version="0.1.0",
    zip_safe=False,
)
