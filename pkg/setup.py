from pathlib import Path

from setuptools import find_packages, setup

readme_file = Path(__file__).parent / 'README.md'
if readme_file.exists():
    with readme_file.open() as f:
        long_description = f.read()
else:
    # Building from an sdist without the README
    long_description = ''

setup(
    name='provclose',
    version='0.1.0',
    description='Closures of cyclic subgroups of free groups in pro-V topologies',
    long_description=long_description,
    long_description_content_type='text/markdown',
    license='Apache 2.0',
    author='Kitware, Inc.',
    author_email='kitware@kitware.com',
    keywords='free groups, profinite topology, pseudovarieties, finite groups',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Framework :: Celery',
        'Framework :: Django :: 4.2',
        'Framework :: Django',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.12',
        'Programming Language :: Python',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    python_requires='>=3.10',
    packages=find_packages(),
    include_package_data=True,
    package_data={'provclose.core.tests': ['data/*']},
    install_requires=[
        'celery',
        'django~=4.2',
        'django-configurations',
        'djangorestframework>=3.14.0',
        'more-itertools',
        'numpy',
        'sympy',
    ],
    extras_require={'dev': ['ipython', 'tox']},
    entry_points={'console_scripts': ['provclose=provclose.cli:main']},
)
